#ifndef BVB_ERRORS_HPP
#define BVB_ERRORS_HPP

#include <stdexcept>

namespace bvb {

// Malformed textual input: ring descriptions, element syntax, Gauss codes,
// biquandle or bracket table files.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace bvb

#endif  // BVB_ERRORS_HPP
