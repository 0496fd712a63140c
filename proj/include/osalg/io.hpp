#pragma once

#include <string>

#include "osalg/algebra.hpp"
#include "osalg/arrangement.hpp"
#include "osalg/chi.hpp"
#include "osalg/matroid.hpp"
#include "osalg/residue.hpp"

namespace osalg {

/// Throws input_error when the file cannot be read.
std::string read_text_file(const std::string& path);

/// {"n": int, "circuits": [[int,...],...], "unchecked": bool?}. Circuit
/// axiom violations are rejected unless "unchecked" is true.
Matroid parse_matroid(const std::string& json_text);
Matroid load_matroid_file(const std::string& path);

Arrangement load_arrangement_file(const std::string& path);

/// {"level": int, "elements": [{"order": [int,...]}, ...]}.
DiagonalBasisCandidate parse_diagonal_basis(const std::string& json_text);
DiagonalBasisCandidate load_diagonal_basis_file(const std::string& path);

/// {"beta": {"i,j": "p/q", ...}} applied over the given default.
BetaTable parse_beta_config(const std::string& json_text, int n, const Scalar& default_value);
BetaTable load_beta_config_file(const std::string& path, int n, const Scalar& default_value);

/// {"terms": [{"support": [1,2,5], "coeff": "-1/2"}, ...]}, supports in
/// canonical order, coefficients reduced.
std::string element_to_json(const AlgebraElement& e);
AlgebraElement element_from_json(const std::string& json_text);

}  // namespace osalg
