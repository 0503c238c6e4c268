#ifndef IMPLACE_ERROR_HPP
#define IMPLACE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace implace {

enum class errc {
    invalid_argument = 1,
    invalid_instance,
    invalid_spec,
    invalid_layout,
    area_mismatch,
    parse_error,
    io_error,
    internal,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string &message)
        : std::runtime_error(message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

} // namespace implace

#endif
