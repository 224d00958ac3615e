#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specpot/families.hpp"

namespace specpot {

enum class Interval { R, RPlus, RMinus };

std::string interval_name(Interval i);
std::optional<Interval> interval_from_name(const std::string& s);

/// One candidate energy and the (k, signs) data producing it.
struct Candidate {
    Rational energy;
    std::vector<std::string> provenance;
    bool degenerate = false;
};

struct CandidateSet {
    std::vector<Candidate> candidates;   // sorted by energy

    std::vector<Rational> energies() const;
    std::vector<Rational> degenerate() const;
};

/// psi = e^q z^g R with R rational in z.
struct ClosedForm {
    RatFun q;
    Rational g;
    RatFun R;

    /// Requires 2 g to be an integer.
    TowerElem as_tower() const;
    /// psi'/psi
    RatFun log_derivative() const;
    std::string to_string() const;
    /// Double-precision value; nullopt at poles and for z^g off the real domain.
    std::optional<double> evaluate(double z) const;
};

struct EigenPair {
    Rational E0;
    ClosedForm psi;
    std::map<Interval, bool> l2;
};

struct SpectrumReport {
    bool discrete = true;
    std::string note;
    CandidateSet candidates;
    std::vector<EigenPair> eigenpairs;
    /// Candidates without a closed-form eigenfunction, with the reason.
    std::vector<std::pair<Rational, std::string>> rejected;
};

CandidateSet enumerate_candidates(const PotentialResult& result, unsigned bound);

inline unsigned default_degree_cap(unsigned bound) { return 2 * bound + 8; }

/// Closed-form solution at E0 that is square integrable on R, R+ or R-.
/// Throws NoSolution or DegreeCapExceeded.
EigenPair liouvillian_eigenfunction(const PotentialResult& result, const Rational& E0,
                                    unsigned degree_cap = default_degree_cap(3));

bool square_integrable(const ClosedForm& psi, Interval interval);

/// psi'' + (V + E0) psi divided by psi, as a rational function.
RatFun eigen_residual(const RatFun& V, const Rational& E0, const ClosedForm& psi);

SpectrumReport compute_spectrum(const PotentialResult& result, unsigned kmax);

} // namespace specpot
