#ifndef TEAMAUT_PARSER_HPP
#define TEAMAUT_PARSER_HPP

#include <optional>
#include <string>
#include <vector>

#include "teamaut/featured.hpp"
#include "teamaut/pdl.hpp"
#include "teamaut/realise.hpp"

namespace teamaut {

/// Surface form of a sync clause; patterns and intervals are kept as
/// written so documents can be printed back.
struct SyncDecl {
  Action action;
  std::optional<FeatureExpr> when;  // absent = default rule
  std::optional<SyncType> type;     // explicit intervals
  std::optional<SyncPattern> pattern;
};

struct ModelDocument {
  bool has_system = false;
  std::string system_name;
  FeaturedSystem fsys;
  std::vector<SyncDecl> syncs;
  FeaturedSTS fst;  // compiled from syncs, patterns expanded

  bool has_global = false;
  std::string global_name;
  GlobalModel global;

  std::vector<std::pair<std::string, pdl::Formula>> formulas;

  System plain_system() const { return fsys.underlying(); }
  /// Spec built from the default (unguarded) sync clauses only.
  SyncTypeSpec plain_spec() const;
  /// Signature read off the component alphabets (internals dropped).
  SystemSignature signature() const;
};

ModelDocument parse(const std::string& text);
pdl::Formula parse_formula(const std::string& text);
FeatureExpr parse_feature_expr(const std::string& text);

}  // namespace teamaut

#endif
