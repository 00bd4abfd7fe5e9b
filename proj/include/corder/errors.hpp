#pragma once

#include <stdexcept>
#include <string>

namespace corder {

// An element (or callback result) does not belong to the structure it was
// handed to: wrong variant kind, inconsistent coset decomposition, value
// outside an iota image, malformed descriptor.
struct representation_error : std::runtime_error {
    explicit representation_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented precondition failed; `witness` holds a printable witness.
struct precondition_error : std::runtime_error {
    std::string witness;
    precondition_error(const std::string& what, std::string w = {})
        : std::runtime_error(what + (w.empty() ? "" : " [witness: " + w + "]")), witness(std::move(w)) {}
};

// A size or step guard was exceeded (enumeration guard, floor search bound,
// reduction step bound).
struct guard_error : std::runtime_error {
    explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace corder
