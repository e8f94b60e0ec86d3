#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "repgeo/errors.hpp"
#include "repgeo/field.hpp"
#include "repgeo/group.hpp"
#include "repgeo/linalg.hpp"
#include "repgeo/representation.hpp"
#include "repgeo/terms.hpp"

namespace repgeo {

// Representation files:
//
//   field p=2
//   group table                 # or: group cyclic(2) as a
//     elements 1 a b ab         #     group product(cyclic(2) as a, cyclic(2) as b)
//     row 1 a b ab
//     ...
//   dim 2
//   act a = [[0,1],[1,0]]       # one line per non-identity element
//
// Group files hold only the `group` section. System files hold optional
// `xvars` / `yvars` headers followed by `module: <expr> = 0` and
// `group: <word> = 1` lines.

Representation parse_rep_file(std::string_view text);
FiniteGroup parse_group_file(std::string_view text);

struct SystemFile {
  FreeContext context;
  EquationSystem system;
};

/// Coefficients are reduced in `field`. Without headers, identifiers that
/// start with 'x' are X-variables and all others Y-variables.
SystemFile parse_system_file(std::string_view text, const PrimeField& field);

GroupWord parse_word(std::string_view text, const FreeContext& context);
RingElement parse_ring(std::string_view text, const FreeContext& context);
ModuleElement parse_module(std::string_view text, const FreeContext& context);
/// A module element when any X-variable occurs, otherwise a group word.
std::variant<ModuleElement, GroupWord> parse_term(std::string_view text, const FreeContext& context);
Atom parse_atom(std::string_view text, const FreeContext& context);
/// `a & b => c`, `=> c`, or a bare atom (no premises).
QuasiIdentity parse_qid(std::string_view text, const FreeContext& context);

/// Context holding every identifier of `text`, sorted, split by the
/// leading-'x' convention.
FreeContext infer_context(std::string_view text, const PrimeField& field);

Matrix parse_matrix(std::string_view text, const PrimeField& field);

std::string serialize(const GroupWord& w);
std::string serialize(const RingElement& r);
std::string serialize(const ModuleElement& u);
std::string serialize(const Atom& a);
std::string serialize(const QuasiIdentity& q);
std::string serialize(const EquationSystem& s);
std::string serialize(const FiniteGroup& g);
std::string serialize(const Representation& r);
std::string serialize(const Matrix& m);

}  // namespace repgeo
