#pragma once

#include <stdexcept>
#include <string>

namespace solq {

enum class errc {
    not_strict,
    not_member,
    bad_params,
    bad_increment,
    truncation_underflow,
    divergent_product,
    unbounded_spec,
    no_enum_form,
    invalid_labels,
    invalid_pair,
    internal,
};

const char* to_string(errc code) noexcept;

/// Exception carrying a machine-checkable error code alongside the message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what_arg)
        : std::runtime_error(std::string(to_string(code)) + ": " + what_arg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace solq
