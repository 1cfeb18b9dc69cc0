#pragma once

#include <string>

#include "pignose/matching.hpp"
#include "pignose/paths.hpp"
#include "pignose/signed_perm.hpp"
#include "pignose/tableaux.hpp"

namespace pignose {

// Deterministic ASCII renderings for the CLI. Each drawing starts with a
// one-line summary (object kind and arc/step counts) followed by the picture.

std::string render_tableau(const PermTableau& t);
std::string render_tableau(const PermTableauB& t);

// Single-sided diagram: pignoses 1..n; spiral arcs are drawn split through
// virtual pignoses to the left of the diagram, marked with '~'.
std::string render_pignose(const SignedPerm& pi);

// Doubled diagram on pignoses labeled -n..-1,1..n.
std::string render_full_pignose(const SignedPerm& pi);

std::string render_matching(const OrderedMatching& m);

std::string render_path(const LabeledMotzkinPath& p);
std::string render_path(const MotzkinSuffix& p);

}  // namespace pignose
