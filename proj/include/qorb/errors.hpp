#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qorb {

/// A caller broke an operation's precondition (mismatched genus, variable set, ranges).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Gröbner construction needed an S-polynomial above the configured degree cap.
class DegreeCapExceeded : public std::runtime_error {
public:
    DegreeCapExceeded(int degree, int cap)
        : std::runtime_error("degree cap exceeded: S-polynomial of degree " + std::to_string(degree) +
                             " above cap " + std::to_string(cap)),
          degree_(degree),
          cap_(cap) {}
    int degree() const { return degree_; }
    int cap() const { return cap_; }

private:
    int degree_;
    int cap_;
};

class InhomogeneousIdeal : public std::runtime_error {
public:
    explicit InhomogeneousIdeal(const std::string& generator)
        : std::runtime_error("inhomogeneous generator: " + generator), generator_(generator) {}
    const std::string& generator() const { return generator_; }

private:
    std::string generator_;
};

class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string message, std::vector<std::string> expected = {})
        : std::runtime_error(render(offset, message, expected)),
          offset_(offset),
          message_(std::move(message)),
          expected_(std::move(expected)) {}

    std::size_t offset() const { return offset_; }
    const std::string& message() const { return message_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string render(std::size_t offset, const std::string& message,
                              const std::vector<std::string>& expected) {
        std::string out = "parse error at byte " + std::to_string(offset) + ": " + message;
        if (!expected.empty()) {
            out += " (expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) out += (i ? ", " : "") + expected[i];
            out += ")";
        }
        return out;
    }

    std::size_t offset_;
    std::string message_;
    std::vector<std::string> expected_;
};

}  // namespace qorb
