#pragma once

#include <stdexcept>
#include <string>

namespace journalnet {

// Base class for every problem caused by the data rather than by the caller.
// The CLI maps these to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

#define JOURNALNET_DATA_ERROR(Name)                                \
    class Name : public DataError {                                \
    public:                                                        \
        explicit Name(const std::string& msg) : DataError(msg) {}  \
    }

JOURNALNET_DATA_ERROR(MissingColumn);    // header lacks a mapped field
JOURNALNET_DATA_ERROR(EmptyInput);       // no data rows
JOURNALNET_DATA_ERROR(EmptyResult);      // no node survives the citation threshold
JOURNALNET_DATA_ERROR(NoConvergence);    // iteration limit hit above tolerance
JOURNALNET_DATA_ERROR(DegenerateInput);  // too few observations to correlate
JOURNALNET_DATA_ERROR(EmptyGroup);       // summary requested over an empty group
JOURNALNET_DATA_ERROR(UnknownJournal);   // journal absent from every snapshot
JOURNALNET_DATA_ERROR(MissingMedians);   // no group medians for the latest year
JOURNALNET_DATA_ERROR(EmptyProduction);  // production table empty or all-zero
JOURNALNET_DATA_ERROR(MalformedHeader);  // net file does not start with a vertex section
JOURNALNET_DATA_ERROR(DanglingEdge);     // edge references a vertex id outside 1..N
JOURNALNET_DATA_ERROR(IoFailure);        // stream went bad while writing

#undef JOURNALNET_DATA_ERROR

}  // namespace journalnet
