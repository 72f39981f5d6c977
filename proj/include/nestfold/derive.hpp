#pragma once

#include "nestfold/core.hpp"
#include "nestfold/spec.hpp"

namespace nestfold {

// One nullary index constructor per root parameter in declaration order,
// then one index constructor per closure member with matching arity.
IndexTypeDecl derive_index_type(const Program& p, const std::string& root);

// The H-style interpretation for a derived index type.
InterpretationFn derive_interpretation(const Program& p, const std::string& root,
                                       const IndexTypeDecl& idx);

// The direct dependently typed fold: leaf cases for the root parameters,
// then one case per constructor of each closure member.
FoldSpec derive_fold_spec(const Program& p, const std::string& root);

// Same cases, motive generalized from index-only to (index, value-at-index).
InductionSpec derive_induction_spec(const FoldSpec& f);

// Constructors kept, supplied carrier functions at the parameter leaves.
MapSpec derive_map_spec(const FoldSpec& f);

// Interpretation with the root index constructor replaced by the motive
// variable, plus the higher-order fold type and instantiation recipe.
HOFoldSpec derive_hofold(const Program& p, const std::string& root, const FoldSpec& f);

// Non-nested index-parameterized twin with a companion fold and the
// to/from constructor-replacement algebras.
IndexedRepDecl derive_indexed_rep(const Program& p, const std::string& root);
IndexedRepDecl derive_indexed_rep_of(const FoldSpec& f, const std::string& family_name);

// to = fold over the nested family mapping each constructor to its indexed
// twin; from = foldN mapping each indexed constructor back.
using ConversionAlgebra = std::vector<std::pair<std::string, std::string>>;
std::pair<ConversionAlgebra, ConversionAlgebra> derive_conversions(const IndexedRepDecl& r);

// Church encoding of the indexed representation; emission-only.
ChurchEncodingDecl derive_church(const FoldSpec& f, const std::string& family_name);

// Full bundle for one root.
Artifacts derive_artifacts(const Program& p, const std::string& root);

}  // namespace nestfold
