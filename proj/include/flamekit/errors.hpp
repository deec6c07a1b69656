#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace flamekit {

// Error categories map onto CLI exit codes: parse -> 1, domain -> 2, cap -> 3.
class error : public std::runtime_error {
public:
    error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class parse_error : public error {
public:
    parse_error(int line, const std::string& what)
        : error("parse", "line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

class domain_error : public error {
public:
    domain_error(std::string code, const std::string& what) : error(std::move(code), what) {}
};

class cap_error : public error {
public:
    explicit cap_error(const std::string& what) : error("cap", what) {}
};

// A guaranteed postcondition failed to verify: always a bug, never user input.
class internal_error : public error {
public:
    explicit internal_error(const std::string& what) : error("internal", what) {}
};

inline void require(bool cond, const std::string& code, const std::string& what) {
    if (!cond) throw domain_error(code, what);
}

}  // namespace flamekit
