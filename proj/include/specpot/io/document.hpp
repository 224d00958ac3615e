#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "specpot/spectrum.hpp"

namespace specpot {

inline constexpr int kSchemaVersion = 1;

struct PotentialDocument {
    PotentialResult result;
    std::vector<EigenPair> eigenpairs;
};

/// Node lists: "(k,+,-);(k,-,+)" for family 1, "(k,+);(k,-)" for family 2.
std::vector<NodeSpec1> parse_nodes1(std::string_view text);
std::vector<NodeSpec2> parse_nodes2(std::string_view text);
std::string format_nodes(const std::vector<NodeSpec1>& nodes);
std::string format_nodes(const std::vector<NodeSpec2>& nodes);

std::optional<Family> family_from_name(std::string_view name);

/// Inverse of ClosedForm::as_tower for e^q z^g R with g in {0, 1/2}.
ClosedForm closed_form_from_tower(const TowerElem& t);

/// Pretty-printed JSON, two-space indent, trailing newline.
std::string to_json(const PotentialDocument& doc);
/// Throws DocumentError on schema violations and when a structured form
/// disagrees with its expression string.
PotentialDocument from_json(std::string_view text);

/// Tab-separated columns z, V(z), then psi(z) per eigenpair; empty cells at poles.
std::string plot_data(const PotentialDocument& doc, const Rational& lo, const Rational& hi,
                      unsigned samples);

/// M, H and V as display formulas.
std::string render_latex(const PotentialDocument& doc);

} // namespace specpot
