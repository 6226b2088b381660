#pragma once

#include <string>
#include <vector>

#include "nss/intmat.hpp"

namespace nss {

// One Morse event of a diagram word, read bottom to top.
//  cup  p lu|ru : local minimum creating strands at (p, p+1); lu = left leg
//                 oriented up (coev), ru = right leg up (pivotal coev).
//  cap  p lu|ru : local maximum joining strands (p, p+1); lu = left leg up
//                 (pivotal ev), ru = right leg up (ev).
//  x+/x- p      : crossing of strands (p, p+1); x+ is the positive crossing
//                 (the strand running bottom-left to top-right is on top).
struct Event {
  enum class Type { cup, cap, cross };
  Type type;
  int pos = 0;
  bool left_up = true;  // cup/cap orientation variant
  int sign = +1;        // crossing sign (geometric, orientation-independent)
};

struct TangleDiagram {
  std::vector<Event> word;
};

// Text form, one event per line: "cup <pos> <lu|ru>", "cap <pos> <lu|ru>",
// "x+ <pos>", "x- <pos>".  Parse errors carry the offending line index.
TangleDiagram parse_word(const std::vector<std::string>& lines);
std::vector<std::string> format_word(const TangleDiagram& d);

struct ComponentInfo {
  int id = 0;
  int first_cup_event = 0;
  int orientation = +1;  // +1 iff the first cup's left leg points up
  long long writhe = 0;  // blackboard self-writhe (framing)
};

// Strand seen at a slice: which component it belongs to and its direction.
struct Strand {
  int comp = -1;
  int dir = +1;
};

struct TraceResult {
  std::vector<ComponentInfo> comps;
  // component of each cup/cap event; -1 for crossings
  std::vector<int> event_comp;
  // symmetric signed-crossing sums; diagonal holds the writhe, off-diagonal
  // entries are twice the linking number
  IntMat lk2;
  // boundary before each event (index i) plus the final boundary (index n)
  std::vector<std::vector<Strand>> slices;

  long long lk(int a, int b) const { return a == b ? lk2.at(a, a) : lk2.at(a, b) / 2; }
  int ncomp() const { return (int)comps.size(); }
};

// Traces a closed word: components in order of first appearance, writhes,
// pairwise linking numbers, orientation consistency of every cup/cap.
// Throws invalid_input with the event index on malformed words.
TraceResult trace(const TangleDiagram& d);

// Linking data split by component roles (surgery part first).
struct LinkingData {
  IntMat B;       // surgery linking matrix, diagonal = framings
  IntMat lkLK;    // lk(L_j, K_nu)
  std::vector<long long> frK;
  std::vector<int> surgery_ids, physical_ids;
};
LinkingData split_linking(const TraceResult& t, const std::vector<bool>& is_surgery);

}  // namespace nss
