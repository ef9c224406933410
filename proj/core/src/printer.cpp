#include "teamaut/printer.hpp"

#include <sstream>

namespace teamaut {

namespace {

std::string name_set(const std::vector<Name>& ns) {
  if (ns.size() == 1) return ns.front();
  std::string s = "{";
  for (size_t i = 0; i < ns.size(); ++i) {
    if (i) s += ",";
    s += ns[i];
  }
  return s + "}";
}

void print_component(std::ostream& os, const Name& name, const FeaturedCA& c) {
  os << "  component " << name << " {\n";
  auto list = [&](const char* kw, const std::set<Action>& as) {
    if (as.empty()) return;
    os << "    " << kw << " ";
    bool first = true;
    for (const auto& a : as) {
      if (!first) os << ", ";
      os << a;
      first = false;
    }
    os << ";\n";
  };
  list("input", c.ca.inputs);
  list("output", c.ca.outputs);
  list("internal", c.ca.internals);
  os << "    init " << c.ca.states[c.ca.initial] << ";\n";
  for (size_t i = 0; i < c.ca.transitions.size(); ++i) {
    const auto& t = c.ca.transitions[i];
    os << "    " << c.ca.states[t.from] << " -> " << c.ca.states[t.to] << ": "
       << t.action;
    if (c.ca.outputs.count(t.action))
      os << "!";
    else if (c.ca.inputs.count(t.action))
      os << "?";
    if (c.guards[i].kind() != FeatureExpr::Kind::Top)
      os << " [" << c.guards[i].str() << "]";
    os << ";\n";
  }
  os << "  }\n";
}

}  // namespace

std::string print_document(const ModelDocument& doc) {
  std::ostringstream os;
  if (doc.has_system) {
    os << "system " << doc.system_name << " {\n";
    if (!doc.fsys.features.empty()) {
      os << "  features { ";
      bool first = true;
      for (const auto& f : doc.fsys.features) {
        if (!first) os << ", ";
        os << f;
        first = false;
      }
      os << " }\n";
      os << "  model " << doc.fsys.feature_model.str() << ";\n";
    }
    for (size_t i = 0; i < doc.fsys.names.size(); ++i)
      print_component(os, doc.fsys.names[i], doc.fsys.components[i]);
    for (const auto& s : doc.syncs) {
      os << "  sync " << s.action;
      if (s.when) os << " when " << s.when->str();
      os << " = ";
      if (s.pattern)
        os << to_string(*s.pattern);
      else
        os << to_string(s.type->out_range) << " -> "
           << to_string(s.type->in_range);
      os << ";\n";
    }
    os << "}\n";
  }
  if (doc.has_global) {
    os << "global " << doc.global_name << " {\n";
    os << "  init " << doc.global.lts.state_names[doc.global.lts.initial]
       << ";\n";
    for (const auto& t : doc.global.lts.transitions) {
      const Interaction& l = doc.global.lts.alphabet[t.label];
      os << "  " << doc.global.lts.state_names[t.from] << " -> "
         << doc.global.lts.state_names[t.to] << ": " << name_set(l.senders)
         << " -> " << name_set(l.receivers) << ": " << l.action << ";\n";
    }
    os << "}\n";
  }
  for (const auto& [name, f] : doc.formulas)
    os << "formula " << name << " { " << f.str() << " }\n";
  return os.str();
}

}  // namespace teamaut
