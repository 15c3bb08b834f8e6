#ifndef EMOLOG_ERRORS_HPP
#define EMOLOG_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emolog {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Formula or model text that does not match the grammar / file format.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at offset " + std::to_string(position) + ")"),
          position(position) {}
    explicit ParseError(const std::string& msg) : Error(msg), position(0) {}
    std::size_t position;
};

// Transitive closure of a preference relation produced a reflexive pair.
struct CycleError : Error {
    using Error::Error;
};

// A model failed invariant validation (details in the report text).
struct ValidationError : Error {
    using Error::Error;
};

// Evaluation request that the model or semantics cannot answer:
// unknown world/agent/variable, a degree where none is allowed, or a
// missing degree where one is required.
struct EvalError : Error {
    using Error::Error;
};

// Operation applied to a formula outside its domain, e.g. the happy/sad
// swap on a degree-tagged modality.
struct UnsupportedFormula : Error {
    using Error::Error;
};

// Schema instantiated with the wrong number of formula arguments.
struct ArityMismatch : Error {
    using Error::Error;
};

// A sweep or search hit its configured resource cap.
struct CapExceeded : Error {
    CapExceeded(const std::string& msg, std::size_t count)
        : Error(msg), count(count) {}
    std::size_t count;
};

} // namespace emolog

#endif
