#pragma once

#include <stdexcept>
#include <string>

namespace skewhook {

/// Caller supplied something outside an operation's domain (bad shape, bad tableau, ...).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Brute-force style computation refused because the instance is too large.
class size_limit_exceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// An identity that must hold exactly did not. Always a bug, never data.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace skewhook
