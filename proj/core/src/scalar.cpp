#include "cuntz/scalar.hpp"

#include <sstream>

namespace cuntz {

std::string Scalar::str() const {
    if (im_ == 0) return to_string(re_);
    if (re_ == 0) return to_string(im_) + "i";
    std::ostringstream os;
    os << '(' << to_string(re_) << (im_ > 0 ? "+" : "-") << to_string(abs(im_)) << "i)";
    return os.str();
}

}  // namespace cuntz
