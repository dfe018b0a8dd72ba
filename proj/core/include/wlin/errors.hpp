#ifndef WLIN_ERRORS_HPP
#define WLIN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace wlin {

// Two series/fields may only be combined when their contexts are identical.
class ContextMismatchError : public std::invalid_argument {
public:
    explicit ContextMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

// Thrown when a pipeline requires an admissible field and the input has a
// monomial term of negative weighted degree. Carries the first offending
// term (axis, exponents).
class NotAdmissibleError : public std::runtime_error {
public:
    NotAdmissibleError(std::size_t axis, std::vector<unsigned> exponents,
                       const std::string& what)
        : std::runtime_error(what), axis_(axis), exponents_(std::move(exponents)) {}

    std::size_t axis() const { return axis_; }
    const std::vector<unsigned>& exponents() const { return exponents_; }

private:
    std::size_t axis_;
    std::vector<unsigned> exponents_;
};

// Thrown when the adjoint operator on a graded slice is singular. Carries
// the degree and a rational kernel basis in slice coordinates.
class SingularAdjointError : public std::runtime_error {
public:
    SingularAdjointError(long degree, std::vector<std::vector<std::string>> kernel,
                         const std::string& what)
        : std::runtime_error(what), degree_(degree), kernel_(std::move(kernel)) {}

    long degree() const { return degree_; }
    // Kernel vectors as lowest-terms rational strings, one entry per basis element.
    const std::vector<std::vector<std::string>>& kernel() const { return kernel_; }

private:
    long degree_;
    std::vector<std::vector<std::string>> kernel_;
};

// Thrown when a fixed-time evaluation of an isotopy cannot be certified:
// the t-support is still nonzero at the cap.
class NonEvaluativeError : public std::runtime_error {
public:
    explicit NonEvaluativeError(const std::string& what)
        : std::runtime_error(what) {}
};

// Input text could not be parsed. Carries 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error(what), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace wlin

#endif
