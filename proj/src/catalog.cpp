#include "gaussmap/catalog.hpp"

namespace gaussmap {

namespace {

Polynomial monomial(int k) {
    std::vector<Complex> c(static_cast<size_t>(k) + 1, Complex(0));
    c.back() = 1.0;
    return Polynomial(std::move(c));
}

}  // namespace

WeierstrassData catalog_surface(const std::string& name) {
    Polynomial one = Polynomial::constant(1.0);
    if (name == "catenoid") {
        return WeierstrassData(RationalMap(monomial(1), one), RationalMap(one, monomial(1)),
                               {ExtComplex(0.0, 0.0), ExtComplex::inf()}, "catenoid");
    }
    if (name == "enneper") {
        return WeierstrassData(RationalMap(monomial(1), one), RationalMap(monomial(1), one),
                               {ExtComplex::inf()}, "enneper");
    }
    if (name == "enneper2") {
        return WeierstrassData(RationalMap(monomial(2), one), RationalMap(monomial(2), one),
                               {ExtComplex::inf()}, "enneper2");
    }
    if (name == "enneper3") {
        return WeierstrassData(RationalMap(monomial(3), one), RationalMap(monomial(3), one),
                               {ExtComplex::inf()}, "enneper3");
    }
    throw Error(ErrorKind::ParseError, "unknown catalog surface: " + name);
}

std::vector<std::string> catalog_names() { return {"catenoid", "enneper", "enneper2", "enneper3"}; }

}  // namespace gaussmap
