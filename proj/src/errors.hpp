#pragma once

#include <stdexcept>
#include <string>

namespace cycldpc {

// Error taxonomy shared by the core and the C API layer.
enum class Err {
    ok = 0,
    invalid_argument,   // bad sizes, mixed fields, malformed text
    unsupported,        // m does not divide m', degree cap exceeded
    inadmissible_coeff, // seed violates the wrap-around constraint
    degenerate,         // support shares a factor with n
    not_idempotent,
    io,
    internal
};

struct CodeError : std::runtime_error {
    Err code;
    CodeError(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& what) { throw CodeError(c, what); }

} // namespace cycldpc
