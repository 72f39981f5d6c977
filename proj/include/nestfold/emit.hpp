#pragma once

#include <set>
#include <string>

#include "nestfold/spec.hpp"

namespace nestfold {
namespace emit {

struct EmitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Backend { Agda, Json };

// Include keys: nested-decl, interpretation, fold, induction, map, hofold,
// indexed-rep, church.
const std::set<std::string>& include_keys();

struct EmitOptions {
  Backend backend = Backend::Agda;
  std::set<std::string> includes;  // empty = all
  std::string module_name;         // defaults to the root name
  bool type_in_type_pragma = true; // print the pragma when church is included

  bool wants(const std::string& key) const {
    return includes.empty() || includes.count(key) > 0;
  }
};

std::string emit_agda(const Artifacts& a, const EmitOptions& opts);

// Individual renderers shared by emit_agda, the goldens and diagnostics.
std::string format_data_decl(const DataDecl& d);
std::string format_index_type(const IndexTypeDecl& d);
std::string format_interpretation(const InterpretationFn& h);
std::string format_fold(const FoldSpec& f);
std::string format_fold_type(const FoldSpec& f);
std::string format_induction(const InductionSpec& ind);
std::string format_map(const MapSpec& m);
std::string format_hofold(const HOFoldSpec& h);
std::string format_hofold_type(const HOFoldSpec& h);
std::string format_indexed_rep(const IndexedRepDecl& r, const FoldSpec& base);
std::string format_church(const ChurchEncodingDecl& c, const MapSpec& map);
std::string format_constructor(const DataDecl& d, const ConstructorDecl& c);

// One line per fold case: "name : {binders} -> args -> p index".
std::string fold_case_summary(const FoldSpec& f);

// Collapse space runs, strip trailing space, normalize line breaks.
std::string normalize_ws(const std::string& s);

// Canonical JSON for the artifact bundle; stable field order
// {index_type, interpretation, fold_spec, induction_spec, hofold,
//  indexed_rep, church}.
std::string emit_json(const Artifacts& a);
Artifacts load_artifacts(const std::string& json_text);

}  // namespace emit
}  // namespace nestfold
