#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tvcat/phiclass.hpp"
#include "tvcat/tcategory.hpp"
#include "tvcat/theory.hpp"

namespace tvcat::cli {

/// Enumeration limits. Every report embeds the values it ran with.
struct Caps {
  std::size_t carrier = 4;       // largest carrier handed to an enumerating command
  std::size_t quantale = 3;      // largest finite |V| for presheaf enumeration
  std::size_t injective = 4;     // |B| bound of the injectivity search
  std::size_t kz = 6;            // |PhiX| bound before PhiPhiX is built
  std::size_t functions = 4096;  // |V|^|TX| bound
  std::size_t maps = 1 << 16;    // functor enumeration bound
  std::size_t audit = 2;         // universe size for audit-phi
  std::size_t theory = 3;        // set size for audit-theory and load-time certification

  /// Applies "key=value,key=value"; unknown keys are usage errors.
  void apply(std::string_view overrides);
  std::vector<std::pair<std::string, std::size_t>> items() const;
  friend bool operator==(const Caps&, const Caps&) = default;
};

/// The built-in defaults, overridden by TVCAT_DEFAULT_CAPS when set.
Caps default_caps();

/// A relation R on a category, as a list of pairs.
struct Relation {
  std::string on;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Workspace {
  std::string name;
  std::string monad;
  QuantaleRef quantale;
  TheoryRef theory;
  bool audited_on_load = false;
  std::map<std::string, CategoryRef> categories;
  std::map<std::string, TFunctor> functors;
  std::map<std::string, Distributor> distributors;
  std::map<std::string, Relation> relations;
  std::map<std::string, PhiClass> classes;
  Caps caps;

  CategoryRef category(const std::string& name) const;
  const TFunctor& functor(const std::string& name) const;
  const Distributor& distributor(const std::string& name) const;
  const Relation& relation(const std::string& name) const;
  /// A named selection from the classes section, else a built-in class name.
  PhiClass phi(const std::string& name) const;
  /// Name of a category object, for reports.
  std::string name_of(const CategoryRef& c) const;
};

struct LoadOptions {
  bool allow_unaudited = false;
  Caps caps = default_caps();
};

/// Parses and validates a workspace document. `origin` names the source in
/// diagnostics.
Workspace parse_workspace_text(std::string_view text, const std::string& origin, const LoadOptions& options = {});
Workspace parse_workspace(const std::string& path, const LoadOptions& options = {});

/// JSON text of the workspace; parsing it back gives an equal workspace.
std::string serialize_workspace(const Workspace& ws);

/// Object-level equality: same quantale, theory, objects and caps.
bool same_workspace(const Workspace& a, const Workspace& b);

}  // namespace tvcat::cli
