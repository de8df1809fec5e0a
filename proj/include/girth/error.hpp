#pragma once

#include <stdexcept>
#include <string>

namespace girth {

// Library-level failure: malformed input, bad parameters, infeasible
// generator specs. The CLI maps this to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A report broke its oracle sandwich (estimate below the true girth, or a
// deterministic algorithm above its guarantee). The CLI maps this to exit
// code 2; it must never fire for deterministic algorithms on valid inputs.
class GuaranteeViolation : public std::runtime_error {
public:
    explicit GuaranteeViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace girth
