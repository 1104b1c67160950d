#pragma once

#include <stdexcept>
#include <string>

namespace tinsep {

/// Malformed input: bad documents, dimension mismatches, mode mismatches.
class InputError : public std::runtime_error
{
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive search was asked to go past its size limit.
class GuardError : public std::runtime_error
{
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tinsep
