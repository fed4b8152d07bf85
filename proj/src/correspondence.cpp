#include "wedge/correspondence.hpp"

#include <algorithm>
#include <sstream>

namespace wedge {

BosonState to_boson(const FockVector& v) {
    BosonState out;
    for (const auto& [key, coeff] : v.terms()) out.add({key.charge, key.shape}, coeff);
    return out;
}

FockVector to_fermion(const BosonState& w) {
    FockVector out;
    for (const auto& [key, coeff] : w.terms()) out.add({key.zexp, key.shape}, coeff);
    return out;
}

std::vector<OscillatorTerm> oscillator_strip_expansion(int k, const MayaDiagram& s) {
    if (k == 0) throw DomainError("oscillator expansion requires a nonzero shift");
    std::vector<OscillatorTerm> out;
    int top = s.member(1);
    int tail = s.charge() - s.shape().length();
    int lo = tail - std::abs(k) - 1;
    int hi = std::max(top, s.charge()) + std::abs(k) + 1;
    FockVector basis = FockVector::basis({s.charge(), s.shape()});
    for (int l = lo; l <= hi; ++l) {
        FockVector term = create(l, annihilate(l + k, basis));
        if (term.is_zero()) continue;
        const auto& [key, coeff] = *term.terms().begin();
        out.push_back({MayaDiagram(key.charge, key.shape), coeff.sign()});
    }
    return out;
}

namespace {

std::string describe(const GlElement& x) {
    std::ostringstream os;
    os << "(" << x.central.str() << ", ";
    bool first = true;
    for (const auto& [key, coeff] : x.matrix.finite()) {
        if (!first) os << " + ";
        first = false;
        if (!(coeff == Rational(1))) os << coeff.str() << "*";
        os << "E[" << key.first << "," << key.second << "]";
    }
    if (x.matrix.periodic()) {
        for (const auto& [key, coeff] : x.matrix.periodic()->entries) {
            if (!first) os << " + ";
            first = false;
            if (!(coeff == Rational(1))) os << coeff.str() << "*";
            os << "family[N=" << x.matrix.periodic()->period << ",m=" << key.shift << ",i=" << key.i
               << ",j=" << key.j << "]";
        }
    }
    if (first) os << "0";
    os << ")";
    return os.str();
}

} // namespace

EquivarianceReport check_equivariance(const GlElement& x, const FockVector& v) {
    EquivarianceReport report;
    report.element = describe(x);
    report.input = v;
    report.fermionic_then_sigma = to_boson(fock_action(x, v));
    report.sigma_then_bosonic = boson_action(x, to_boson(v));
    report.equal = report.fermionic_then_sigma == report.sigma_then_bosonic;
    return report;
}

} // namespace wedge
