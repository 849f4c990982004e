#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdof {

// Thrown when an exact enumeration (mixture components, constellation
// points) would exceed the configured cap.
class EnumerationCapError : public std::runtime_error {
public:
    EnumerationCapError(std::size_t needed, std::size_t cap)
        : std::runtime_error("enumeration cap exceeded: need " + std::to_string(needed) +
                             " > cap " + std::to_string(cap)),
          needed_(needed), cap_(cap) {}

    std::size_t needed() const { return needed_; }
    std::size_t cap() const { return cap_; }

private:
    std::size_t needed_;
    std::size_t cap_;
};

}  // namespace sdof
