#include "binsum/param_triple.hpp"

#include <stdexcept>
#include <utility>

namespace binsum {

ParamTriple::ParamTriple(Natural n_, Natural b_, Natural c_)
    : n(std::move(n_)), b(std::move(b_)), c(std::move(c_)) {
    if (c.value() < 1)
        throw std::domain_error("parameter c must be >= 1, got c = " + c.value().get_str());
    if (b.value() < c.value())
        throw std::domain_error("parameters must satisfy c <= b, got b = " +
                                b.value().get_str() + ", c = " + c.value().get_str());
}

}  // namespace binsum
