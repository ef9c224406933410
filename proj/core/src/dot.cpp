#include "teamaut/dot.hpp"

#include <sstream>

namespace teamaut {

namespace {

std::string escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

template <typename L>
std::string render(const Lts<L>& l, const std::string& name) {
  auto keep = reachable(l);
  std::ostringstream os;
  os << "digraph \"" << escape(name) << "\" {\n";
  os << "  rankdir=LR;\n";
  os << "  __init [shape=point];\n";
  for (int q : keep)
    os << "  q" << q << " [label=\"" << escape(l.state_names[q])
       << "\", shape=circle];\n";
  os << "  __init -> q" << l.initial << ";\n";
  auto sorted = l.transitions;
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) {
              return std::tie(a.from, l.alphabet[a.label], a.to) <
                     std::tie(b.from, l.alphabet[b.label], b.to);
            });
  for (const auto& t : sorted) {
    if (!keep.count(t.from) || !keep.count(t.to)) continue;
    os << "  q" << t.from << " -> q" << t.to << " [label=\""
       << escape(to_string(l.alphabet[t.label])) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string export_dot(const Lts<SystemLabel>& l, const std::string& name) {
  return render(l, name);
}

std::string export_dot(const Lts<Interaction>& l, const std::string& name) {
  return render(l, name);
}

}  // namespace teamaut
