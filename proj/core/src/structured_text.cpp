#include "cubulate/structured_text.hpp"

#include "cubulate/config.hpp"
#include "cubulate/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <string>

namespace cubulate {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string at_line(const std::string& where, int line) {
  return where + ":" + std::to_string(line);
}

void reject_unknown_keys(const KvFile& kv, const KvSection& sec,
                         std::initializer_list<const char*> allowed) {
  for (const KvEntry& e : sec.entries) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || e.key == k;
    if (!ok)
      fail(ErrorKind::MalformedInput, at_line(kv.where, e.line),
           "unknown key '" + e.key + "' in [" +
               (sec.name.empty() ? "preamble" : sec.name) + "]");
  }
}

void check_version(const KvFile& kv) {
  const KvSection& pre = kv.sections[0];
  if (const std::string* v = pre.get("version"))
    if (*v != "1")
      fail(ErrorKind::MalformedInput, kv.where,
           "unsupported version " + *v + " (this build reads version 1)");
}

} // namespace

const std::string* KvSection::get(const std::string& key) const {
  for (const KvEntry& e : entries)
    if (e.key == key) return &e.value;
  return nullptr;
}

std::string KvSection::get_or(const std::string& key,
                              const std::string& fallback) const {
  const std::string* v = get(key);
  return v ? *v : fallback;
}

const KvSection* KvFile::find(const std::string& name) const {
  for (const KvSection& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

KvFile parse_kv(const std::string& text, const std::string& where) {
  KvFile kv;
  kv.where = where;
  kv.sections.push_back(KvSection{"", 0, {}});

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3)
        fail(ErrorKind::MalformedInput, at_line(where, lineno),
             "malformed section header '" + line + "'");
      std::string name = trim(line.substr(1, line.size() - 2));
      if (name.empty() || name.find('[') != std::string::npos)
        fail(ErrorKind::MalformedInput, at_line(where, lineno),
             "malformed section header '" + line + "'");
      kv.sections.push_back(KvSection{name, lineno, {}});
      continue;
    }

    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      fail(ErrorKind::MalformedInput, at_line(where, lineno),
           "expected 'key = value' or '[section]', got '" + line + "'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      fail(ErrorKind::MalformedInput, at_line(where, lineno), "empty key");
    kv.sections.back().entries.push_back(KvEntry{key, value, lineno});
  }
  return kv;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  if (value.find(',') != std::string::npos) {
    std::size_t start = 0;
    while (start <= value.size()) {
      std::size_t comma = value.find(',', start);
      std::string item =
          trim(value.substr(start, comma == std::string::npos
                                       ? std::string::npos
                                       : comma - start));
      if (!item.empty()) items.push_back(item);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return items;
  }
  std::istringstream in(value);
  std::string item;
  while (in >> item) items.push_back(item);
  return items;
}

int parse_int(const std::string& value, const std::string& where) {
  std::size_t used = 0;
  int out = 0;
  try {
    out = std::stoi(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || value.empty())
    fail(ErrorKind::MalformedInput, where, "expected an integer, got '" + value + "'");
  return out;
}

bool parse_bool(const std::string& value, const std::string& where) {
  if (value == "true" || value == "yes" || value == "1") return true;
  if (value == "false" || value == "no" || value == "0") return false;
  fail(ErrorKind::MalformedInput, where, "expected true or false, got '" + value + "'");
}

namespace {

GroupPresentation builtin_from_section(const KvFile& kv, const KvSection& sec) {
  reject_unknown_keys(kv, sec, {"kind", "rank", "vertices", "edges"});
  const std::string* kind = sec.get("kind");
  if (!kind)
    fail(ErrorKind::MalformedInput, kv.where, "[builtin] needs a kind");

  auto rank = [&]() {
    const std::string* r = sec.get("rank");
    if (!r)
      fail(ErrorKind::MalformedInput, kv.where,
           "builtin kind '" + *kind + "' needs a rank");
    return parse_int(*r, kv.where);
  };

  if (*kind == "free" || *kind == "free_group")
    return GroupPresentation::free_group(rank());
  if (*kind == "free_abelian") return GroupPresentation::free_abelian(rank());
  if (*kind == "surface_genus2") return GroupPresentation::surface_genus2();

  if (*kind == "right_angled_artin" || *kind == "right_angled_coxeter") {
    std::vector<std::string> vertices =
        split_list(sec.get_or("vertices", ""));
    if (vertices.empty())
      fail(ErrorKind::MalformedInput, kv.where,
           "builtin kind '" + *kind + "' needs vertices");
    std::vector<std::pair<int, int>> edges;
    for (const std::string& item : split_list(sec.get_or("edges", ""))) {
      std::size_t dash = item.find('-');
      if (dash == std::string::npos)
        fail(ErrorKind::MalformedInput, kv.where,
             "edge '" + item + "' must name two vertices as x-y");
      std::string a = trim(item.substr(0, dash)), b = trim(item.substr(dash + 1));
      auto index = [&](const std::string& name) {
        auto it = std::find(vertices.begin(), vertices.end(), name);
        if (it == vertices.end())
          fail(ErrorKind::MalformedInput, kv.where,
               "edge endpoint '" + name + "' is not a declared vertex");
        return static_cast<int>(it - vertices.begin());
      };
      edges.emplace_back(index(a), index(b));
    }
    return *kind == "right_angled_artin"
               ? GroupPresentation::right_angled_artin(vertices, edges)
               : GroupPresentation::right_angled_coxeter(vertices, edges);
  }

  fail(ErrorKind::MalformedInput, kv.where,
       "unknown builtin kind '" + *kind +
           "' (free, free_abelian, surface_genus2, right_angled_artin, "
           "right_angled_coxeter)");
}

} // namespace

GroupPresentation group_from_text(const std::string& text) {
  KvFile kv = parse_kv(text, "group spec");
  check_version(kv);
  reject_unknown_keys(kv, kv.sections[0], {"version", "confluent"});

  if (const KvSection* builtin = kv.find("builtin")) {
    for (const KvSection& s : kv.sections)
      if (!s.name.empty() && s.name != "builtin")
        fail(ErrorKind::MalformedInput, at_line(kv.where, s.line),
             "a builtin group spec takes no [" + s.name + "] section");
    return builtin_from_section(kv, *builtin);
  }

  const KvSection* gens = kv.find("generators");
  if (!gens)
    fail(ErrorKind::MalformedInput, kv.where,
         "group spec needs a [builtin] or [generators] section");
  reject_unknown_keys(kv, *gens, {"letters"});

  std::vector<std::string> names = split_list(gens->get_or("letters", ""));
  if (names.empty())
    fail(ErrorKind::MalformedInput, kv.where, "[generators] needs letters");

  auto letter_of = [&](const std::string& name, int line) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      fail(ErrorKind::MalformedInput, at_line(kv.where, line),
           "'" + name + "' is not a declared letter");
    return static_cast<Letter>(it - names.begin());
  };

  std::vector<Letter> inverse(names.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    inverse[i] = static_cast<Letter>(i);
  if (const KvSection* inv = kv.find("inverses")) {
    std::vector<bool> assigned(names.size(), false);
    for (const KvEntry& e : inv->entries) {
      Letter a = letter_of(e.key, e.line), b = letter_of(e.value, e.line);
      if ((assigned[a] && inverse[a] != b) || (assigned[b] && inverse[b] != a))
        fail(ErrorKind::MalformedInput, at_line(kv.where, e.line),
             "conflicting inverse for '" + e.key + "'");
      inverse[a] = b;
      inverse[b] = a;
      assigned[a] = assigned[b] = true;
    }
  }

  Alphabet alphabet(names, inverse);

  std::vector<Rule> rules;
  if (const KvSection* rsec = kv.find("rules")) {
    reject_unknown_keys(kv, *rsec, {"rule"});
    for (const KvEntry& e : rsec->entries) {
      std::size_t arrow = e.value.find("->");
      if (arrow == std::string::npos)
        fail(ErrorKind::MalformedInput, at_line(kv.where, e.line),
             "rule must be written as 'lhs -> rhs'");
      Word lhs = alphabet.parse_word(trim(e.value.substr(0, arrow)));
      Word rhs = alphabet.parse_word(trim(e.value.substr(arrow + 2)));
      rules.push_back(Rule{std::move(lhs), std::move(rhs)});
    }
  }

  bool confluent = true;
  if (const std::string* c = kv.sections[0].get("confluent"))
    confluent = parse_bool(*c, kv.where);

  return GroupPresentation(std::move(alphabet), std::move(rules), confluent);
}

std::string group_to_text(const GroupPresentation& group) {
  std::ostringstream out;
  out << "version = 1\n";

  if (group.builtin()) {
    const BuiltinTag& tag = *group.builtin();
    out << "\n[builtin]\n";
    switch (tag.kind) {
      case BuiltinKind::FreeGroup:
        out << "kind = free\nrank = " << tag.rank << "\n";
        break;
      case BuiltinKind::FreeAbelian:
        out << "kind = free_abelian\nrank = " << tag.rank << "\n";
        break;
      case BuiltinKind::SurfaceGenus2:
        out << "kind = surface_genus2\n";
        break;
      case BuiltinKind::RightAngledArtin:
      case BuiltinKind::RightAngledCoxeter: {
        out << "kind = "
            << (tag.kind == BuiltinKind::RightAngledArtin
                    ? "right_angled_artin"
                    : "right_angled_coxeter")
            << "\nvertices =";
        for (std::size_t i = 0; i < tag.vertices.size(); ++i)
          out << (i ? ", " : " ") << tag.vertices[i];
        out << "\n";
        if (!tag.edges.empty()) {
          out << "edges =";
          for (std::size_t i = 0; i < tag.edges.size(); ++i)
            out << (i ? ", " : " ") << tag.vertices[tag.edges[i].first] << "-"
                << tag.vertices[tag.edges[i].second];
          out << "\n";
        }
        break;
      }
    }
    return out.str();
  }

  const Alphabet& ab = group.alphabet();
  if (!group.confluence_declared()) out << "confluent = false\n";
  out << "\n[generators]\nletters =";
  for (std::size_t i = 0; i < ab.size(); ++i)
    out << (i ? ", " : " ") << ab.name(static_cast<Letter>(i));
  out << "\n\n[inverses]\n";
  for (std::size_t i = 0; i < ab.size(); ++i) {
    Letter j = ab.inverse(static_cast<Letter>(i));
    if (j > i) out << ab.name(static_cast<Letter>(i)) << " = " << ab.name(j) << "\n";
  }
  out << "\n[rules]\n";
  for (const Rule& r : group.rules())
    out << "rule = " << ab.print_word(r.lhs) << " -> " << ab.print_word(r.rhs)
        << "\n";
  return out.str();
}

namespace {

Wall family_wall(const CayleyBall& ball, const std::vector<Word>& gens,
                 const Word& conjugator, int carrier_radius, int trust_radius,
                 int depth, const std::string& label) {
  std::string name = label;
  if (!ball.group().is_identity(conjugator))
    name += " @ " + ball.group().alphabet().print_word(conjugator);
  return wall_from_subgroup(ball, gens, conjugator, carrier_radius, trust_radius,
                            depth, std::move(name));
}

struct FamilySpec {
  std::string label;
  std::vector<Word> generators;
  std::vector<Word> translates;
  int radius = -1;  // -1 = choose automatically
  int depth = -1;
};

FamilySpec read_family(const KvFile& kv, const KvSection& sec,
                       const CayleyBall& ball, int ordinal) {
  reject_unknown_keys(kv, sec,
                      {"label", "generators", "radius", "depth", "translates"});
  const Alphabet& ab = ball.group().alphabet();
  FamilySpec fam;
  fam.label = sec.get_or("label", "family" + std::to_string(ordinal));
  for (const std::string& g : split_list(sec.get_or("generators", "")))
    fam.generators.push_back(ab.parse_word(g));
  for (const std::string& t : split_list(sec.get_or("translates", "1")))
    fam.translates.push_back(ab.parse_word(t));
  if (fam.translates.empty()) fam.translates.push_back(Word{});
  if (const std::string* r = sec.get("radius"))
    fam.radius = parse_int(*r, at_line(kv.where, sec.line));
  if (const std::string* d = sec.get("depth"))
    fam.depth = parse_int(*d, at_line(kv.where, sec.line));
  return fam;
}

Wall abstract_from_section(const KvFile& kv, const KvSection& sec,
                           const CayleyBall& ball, int ordinal) {
  reject_unknown_keys(kv, sec, {"label", "sides", "left"});
  const Alphabet& ab = ball.group().alphabet();
  std::string label = sec.get_or("label", "abstract" + std::to_string(ordinal));
  std::vector<std::uint8_t> side;
  if (const std::string* sides = sec.get("sides")) {
    if (sides->size() != ball.size())
      fail(ErrorKind::MalformedInput, at_line(kv.where, sec.line),
           "sides string has " + std::to_string(sides->size()) +
               " characters for " + std::to_string(ball.size()) + " vertices");
    side.resize(ball.size());
    for (std::size_t i = 0; i < sides->size(); ++i) {
      char c = (*sides)[i];
      if (c == 'L')
        side[i] = 0;
      else if (c == 'R')
        side[i] = 1;
      else if (c == 'O')
        side[i] = 2;
      else
        fail(ErrorKind::MalformedInput, at_line(kv.where, sec.line),
             std::string("sides characters must be L, R or O, got '") + c + "'");
    }
  } else if (const std::string* left = sec.get("left")) {
    side.assign(ball.size(), 1);
    for (const std::string& item : split_list(*left)) {
      auto v = ball.locate(ab.parse_word(item));
      if (!v)
        fail(ErrorKind::MalformedInput, at_line(kv.where, sec.line),
             "'" + item + "' is not in the ball");
      side[*v] = 0;
    }
  } else {
    fail(ErrorKind::MalformedInput, at_line(kv.where, sec.line),
         "[abstract] needs sides or left");
  }
  return abstract_wall(ball, std::move(side), label);
}

// Carrier radius from the spec, or the smallest value that yields a wall at
// the first translate.
int settle_radius(const KvFile& kv, const FamilySpec& fam, const CayleyBall& ball,
                  int trust_radius, int depth, int radius_cap,
                  std::vector<std::string>* notes) {
  if (fam.radius >= 0) return fam.radius;
  for (int r = 0; r <= radius_cap; ++r) {
    try {
      family_wall(ball, fam.generators, fam.translates[0], r, trust_radius,
                  depth, fam.label);
      if (notes)
        notes->push_back("family " + fam.label + ": carrier radius " +
                         std::to_string(r) + " chosen automatically");
      return r;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotCodimensionOne) throw;
    }
  }
  fail(ErrorKind::NotCodimensionOne, kv.where,
       "family " + fam.label + ": no carrier radius up to " +
           std::to_string(radius_cap) + " yields two deep components");
}

} // namespace

WallsSpecResult walls_from_spec(const std::string& text, const CayleyBall& ball,
                                int margin_override, int radius_cap) {
  KvFile kv = parse_kv(text, "walls spec");
  check_version(kv);
  reject_unknown_keys(kv, kv.sections[0], {"version", "margin"});

  int margin = margin_override;
  if (margin < 0) {
    const std::string* m = kv.sections[0].get("margin");
    margin = m ? parse_int(*m, kv.where) : default_margin(ball.radius());
  }
  if (margin < 0 || margin >= ball.radius())
    fail(ErrorKind::MalformedInput, kv.where,
         "margin " + std::to_string(margin) + " must lie in [0, radius)");

  WallsSpecResult result;
  result.margin = margin;
  const int trust = ball.radius() - margin;

  int family_ordinal = 0, abstract_ordinal = 0;
  for (const KvSection& sec : kv.sections) {
    if (sec.name.empty()) continue;

    if (sec.name == "edges") {
      reject_unknown_keys(kv, sec, {"enabled"});
      if (parse_bool(sec.get_or("enabled", "true"), kv.where)) {
        std::vector<Wall> ew = edge_walls(ball);
        for (Wall& w : ew) result.walls.push_back(std::move(w));
      }
      continue;
    }

    if (sec.name == "family") {
      FamilySpec fam = read_family(kv, sec, ball, family_ordinal++);
      int depth = fam.depth >= 0 ? fam.depth
                                 : default_depth_threshold(ball.radius(), margin);
      int radius = settle_radius(kv, fam, ball, trust, depth, radius_cap,
                                 &result.notes);
      for (const Word& t : fam.translates)
        result.walls.push_back(
            family_wall(ball, fam.generators, t, radius, trust, depth, fam.label));
      continue;
    }

    if (sec.name == "abstract") {
      result.walls.push_back(
          abstract_from_section(kv, sec, ball, abstract_ordinal++));
      continue;
    }

    fail(ErrorKind::MalformedInput, at_line(kv.where, sec.line),
         "unknown section [" + sec.name +
             "] (family, edges, abstract)");
  }

  return result;
}

std::vector<WallFamily> families_from_spec(const std::string& text,
                                           const CayleyBall& ball, int margin) {
  KvFile kv = parse_kv(text, "families spec");
  check_version(kv);
  reject_unknown_keys(kv, kv.sections[0], {"version", "margin"});
  if (margin < 0 || margin >= ball.radius())
    fail(ErrorKind::MalformedInput, kv.where,
         "margin " + std::to_string(margin) + " must lie in [0, radius)");

  std::vector<WallFamily> families;
  int ordinal = 0;
  const int trust = ball.radius() - margin;
  for (const KvSection& sec : kv.sections) {
    if (sec.name.empty()) continue;

    if (sec.name == "family") {
      FamilySpec fam = read_family(kv, sec, ball, ordinal++);
      int depth = fam.depth >= 0
                      ? fam.depth
                      : default_depth_threshold(ball.radius(), margin);
      int radius = settle_radius(kv, fam, ball, trust, depth, 4, nullptr);
      families.push_back(
          WallFamily{fam.label, family_wall(ball, fam.generators, Word{}, radius,
                                            trust, depth, fam.label)});
      continue;
    }

    if (sec.name == "abstract") {
      Wall base = abstract_from_section(kv, sec, ball, ordinal++);
      std::string label = base.label;
      families.push_back(WallFamily{std::move(label), std::move(base)});
      continue;
    }

    fail(ErrorKind::MalformedInput, at_line(kv.where, sec.line),
         "candidate specs take [family] and [abstract] sections");
  }
  return families;
}

} // namespace cubulate
