#pragma once

#include <string>

#include <json.hpp>

#include "qbohr/bohr.hpp"
#include "qbohr/kacq.hpp"

namespace qbohr::io {

using nlohmann::json;

// Schemas are documented in docs/format.md. All complex numbers are
// [re, im] pairs; matrices are row-major arrays of rows. Serialization is
// canonical (sorted keys, shortest round-trip doubles), so
// emit -> parse -> emit is bit-identical.

json algebra_to_json(const MultiMatrixAlgebra& A);
AlgebraPtr algebra_from_json(const json& j);

json element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const json& j, const AlgebraPtr& A);

json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

json map_to_json(const LinearMap& f);
/// Source/target algebras are embedded in the map object.
LinearMap map_from_json(const json& j);

json qsg_to_json(const QuantumSemigroup& G);
QsgPtr qsg_from_json(const json& j, double tol = 1e-8);

json functional_to_json(const StateFunctional& phi);
StateFunctional functional_from_json(const json& j, const AlgebraPtr& A);

json rep_to_json(const RepMatrix& T);
/// When A is null the parent embedded in the object is used.
RepMatrix rep_from_json(const json& j, const AlgebraPtr& A = nullptr);

json family_to_json(const StateFamily& F);
StateFamily family_from_json(const json& j, const AlgebraPtr& A);

/// Optionally embeds a computed Hopf structure into the bundle.
json sub_to_json(const SubQuantumGroup& B, const HopfStructure* hopf = nullptr);
SubQuantumGroup sub_from_json(const json& j, double tol = 1e-8);

json quotient_to_json(const QuotientResult& Q);

json verdict_to_json(const Verdict& v);

/// Canonical text form used by the CLI and the round-trip tests.
std::string dump(const json& j);

/// Parse with an InputError carrying the byte offset on malformed input.
json parse(const std::string& text);
json parse_file(const std::string& path);

}  // namespace qbohr::io
