#pragma once

#include "cubulate/cayley_ball.hpp"
#include "cubulate/criteria.hpp"
#include "cubulate/rewriting.hpp"
#include "cubulate/wallspace.hpp"

#include <string>
#include <vector>

namespace cubulate {

// Line-based key-value text: `[section]` headers, `key = value` entries,
// `#` comments.  Repeated sections and repeated keys are preserved in order;
// entries before the first header form the unnamed preamble section.
struct KvEntry {
  std::string key;
  std::string value;
  int line = 0;
};

struct KvSection {
  std::string name;
  int line = 0;
  std::vector<KvEntry> entries;

  const std::string* get(const std::string& key) const;
  std::string get_or(const std::string& key, const std::string& fallback) const;
};

struct KvFile {
  std::string where;
  std::vector<KvSection> sections;  // sections[0] is the preamble

  const KvSection* find(const std::string& name) const;
};

KvFile parse_kv(const std::string& text, const std::string& where);

// Comma-separated items, or whitespace-separated when no comma appears.
std::vector<std::string> split_list(const std::string& value);

int parse_int(const std::string& value, const std::string& where);
bool parse_bool(const std::string& value, const std::string& where);

// Group spec: either a [builtin] section (kind free | free_abelian |
// surface_genus2 | right_angled_artin | right_angled_coxeter with rank or
// vertices/edges), or [generators] / [inverses] / [rules] describing a
// rewriting system.  Preamble keys: version, confluent.
GroupPresentation group_from_text(const std::string& text);
std::string group_to_text(const GroupPresentation& group);

struct WallsSpecResult {
  int margin = 0;
  std::vector<Wall> walls;
  std::vector<std::string> notes;
};

// Walls spec evaluated over a ball.  [family] sections build subgroup walls
// (generators, carrier radius, explicit translates as conjugators); [edges]
// turns on every splitting-edge wall; [abstract] sections give raw partitions
// (a sides string over all vertices, or the list of Left vertices).  A family
// without a radius key tries carrier radii 0, 1, ... up to radius_cap and
// records the first that works.
WallsSpecResult walls_from_spec(const std::string& text, const CayleyBall& ball,
                                int margin_override = -1, int radius_cap = 4);

// [family] sections only; builds each base wall at the identity coset.
std::vector<WallFamily> families_from_spec(const std::string& text,
                                           const CayleyBall& ball, int margin);

} // namespace cubulate
