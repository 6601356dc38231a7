#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nuplus {

// Knot-expression syntax error; position is a 0-based byte offset into the
// input text. Semantic problems (non-coprime parameters, malformed sequences)
// are std::domain_error instead.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// A cabling formula was invoked outside the regime it is valid in. Carries
// the unconditional lower bound that still holds for the given input.
class regime_error : public std::domain_error {
public:
    regime_error(const std::string& what, std::int64_t lower_bound)
        : std::domain_error(what), lower_bound_(lower_bound) {}
    std::int64_t lower_bound() const { return lower_bound_; }

private:
    std::int64_t lower_bound_;
};

// An exact identity that must hold by construction failed. Signals formula
// misuse or a bug, not bad user input.
class inconsistency_error : public std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace nuplus
