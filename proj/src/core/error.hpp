#ifndef MARGIN_MCMC_ERROR_HPP
#define MARGIN_MCMC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace margin_mcmc {

enum class ErrorCode {
    invalid_argument,  // bad input or violated precondition
    parse,             // malformed matrix text / numbers
    limit,             // enumeration cap exceeded
    io,                // file system failure
    internal           // self-check failure (never a user error)
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace margin_mcmc

#endif
