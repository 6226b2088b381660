#include "nss/tangle.hpp"

#include <algorithm>
#include <sstream>

#include "nss/errors.hpp"

namespace nss {

TangleDiagram parse_word(const std::vector<std::string>& lines) {
  TangleDiagram d;
  for (size_t i = 0; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    std::string op;
    in >> op;
    if (op.empty() || op[0] == '#') continue;
    Event e;
    auto bad = [&](const std::string& why) {
      fail_invalid("event " + std::to_string(i) + ": " + why + " in '" + lines[i] + "'");
    };
    if (op == "cup" || op == "cap") {
      e.type = op == "cup" ? Event::Type::cup : Event::Type::cap;
      std::string variant;
      if (!(in >> e.pos >> variant)) bad("expected '<pos> <lu|ru>'");
      if (variant == "lu")
        e.left_up = true;
      else if (variant == "ru")
        e.left_up = false;
      else
        bad("unknown orientation variant '" + variant + "'");
    } else if (op == "x+" || op == "x-") {
      e.type = Event::Type::cross;
      e.sign = op == "x+" ? +1 : -1;
      if (!(in >> e.pos)) bad("expected '<pos>'");
    } else {
      bad("unknown event '" + op + "'");
    }
    if (e.pos < 0) bad("negative position");
    d.word.push_back(e);
  }
  return d;
}

std::vector<std::string> format_word(const TangleDiagram& d) {
  std::vector<std::string> out;
  out.reserve(d.word.size());
  for (const Event& e : d.word) {
    std::ostringstream s;
    switch (e.type) {
      case Event::Type::cup:
        s << "cup " << e.pos << ' ' << (e.left_up ? "lu" : "ru");
        break;
      case Event::Type::cap:
        s << "cap " << e.pos << ' ' << (e.left_up ? "lu" : "ru");
        break;
      case Event::Type::cross:
        s << (e.sign > 0 ? "x+ " : "x- ") << e.pos;
        break;
    }
    out.push_back(s.str());
  }
  return out;
}

namespace {

struct UF {
  std::vector<int> parent;
  std::vector<int> first_event;  // earliest cup event in the class
  int make(int ev) {
    parent.push_back((int)parent.size());
    first_event.push_back(ev);
    return (int)parent.size() - 1;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (first_event[a] > first_event[b]) std::swap(a, b);
    parent[b] = a;
  }
};

struct SimStrand {
  int arc;
  int dir;
};

}  // namespace

TraceResult trace(const TangleDiagram& d) {
  UF uf;
  std::vector<SimStrand> st;
  struct Cross {
    int arc_a, arc_b;
    long long s;
  };
  std::vector<Cross> crossings;
  std::vector<int> cup_arc(d.word.size(), -1);  // arc created by each cup event
  std::vector<std::vector<SimStrand>> sim_slices;

  for (size_t i = 0; i < d.word.size(); ++i) {
    sim_slices.push_back(st);
    const Event& e = d.word[i];
    auto bad = [&](const std::string& why) {
      fail_invalid("event " + std::to_string(i) + ": " + why);
    };
    switch (e.type) {
      case Event::Type::cup: {
        if (e.pos > (int)st.size()) bad("cup position out of range");
        int arc = uf.make((int)i);
        cup_arc[i] = arc;
        int dl = e.left_up ? +1 : -1;
        st.insert(st.begin() + e.pos, {SimStrand{arc, dl}, SimStrand{arc, -dl}});
        break;
      }
      case Event::Type::cap: {
        if (e.pos + 1 >= (int)st.size()) bad("cap position out of range");
        SimStrand a = st[e.pos], b = st[e.pos + 1];
        int need_l = e.left_up ? +1 : -1;
        if (a.dir != need_l || b.dir != -need_l)
          bad("cap orientation variant conflicts with strand directions");
        uf.unite(a.arc, b.arc);
        st.erase(st.begin() + e.pos, st.begin() + e.pos + 2);
        break;
      }
      case Event::Type::cross: {
        if (e.pos + 1 >= (int)st.size()) bad("crossing position out of range");
        SimStrand a = st[e.pos], b = st[e.pos + 1];
        crossings.push_back({a.arc, b.arc, (long long)e.sign * a.dir * b.dir});
        std::swap(st[e.pos], st[e.pos + 1]);
        break;
      }
    }
  }
  if (!st.empty()) fail_invalid("word leaves " + std::to_string(st.size()) + " open strands");
  sim_slices.push_back(st);

  TraceResult t;
  // components: arc roots ordered by first cup event
  std::vector<int> roots;
  for (size_t i = 0; i < d.word.size(); ++i)
    if (cup_arc[i] >= 0) {
      int r = uf.find(cup_arc[i]);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
  std::sort(roots.begin(), roots.end(),
            [&](int a, int b) { return uf.first_event[a] < uf.first_event[b]; });
  std::vector<int> comp_of_root(uf.parent.size(), -1);
  for (size_t c = 0; c < roots.size(); ++c) comp_of_root[roots[c]] = (int)c;
  auto comp_of_arc = [&](int arc) { return comp_of_root[uf.find(arc)]; };

  t.comps.resize(roots.size());
  for (size_t c = 0; c < roots.size(); ++c) {
    t.comps[c].id = (int)c;
    t.comps[c].first_cup_event = uf.first_event[roots[c]];
    t.comps[c].orientation = d.word[uf.first_event[roots[c]]].left_up ? +1 : -1;
  }
  t.event_comp.assign(d.word.size(), -1);
  for (size_t i = 0; i < d.word.size(); ++i)
    if (cup_arc[i] >= 0) t.event_comp[i] = comp_of_arc(cup_arc[i]);
  // caps: component of either consumed strand (from the slice before)
  for (size_t i = 0; i < d.word.size(); ++i)
    if (d.word[i].type == Event::Type::cap)
      t.event_comp[i] = comp_of_arc(sim_slices[i][d.word[i].pos].arc);

  int n = (int)roots.size();
  t.lk2 = IntMat(n, n);
  for (const auto& cr : crossings) {
    int a = comp_of_arc(cr.arc_a), b = comp_of_arc(cr.arc_b);
    if (a == b)
      t.lk2.at(a, a) += cr.s;
    else {
      t.lk2.at(a, b) += cr.s;
      t.lk2.at(b, a) += cr.s;
    }
  }
  for (int a = 0; a < n; ++a) {
    t.comps[a].writhe = t.lk2.at(a, a);
    for (int b = 0; b < n; ++b)
      if (a != b && t.lk2.at(a, b) % 2 != 0)
        fail_invalid("odd inter-component crossing count between components " +
                     std::to_string(a) + " and " + std::to_string(b));
  }

  t.slices.resize(sim_slices.size());
  for (size_t i = 0; i < sim_slices.size(); ++i) {
    t.slices[i].reserve(sim_slices[i].size());
    for (const auto& s : sim_slices[i]) t.slices[i].push_back({comp_of_arc(s.arc), s.dir});
  }
  return t;
}

LinkingData split_linking(const TraceResult& t, const std::vector<bool>& is_surgery) {
  if ((int)is_surgery.size() != t.ncomp()) fail_invalid("split_linking: role vector size mismatch");
  LinkingData out;
  for (int c = 0; c < t.ncomp(); ++c)
    (is_surgery[c] ? out.surgery_ids : out.physical_ids).push_back(c);
  int m = (int)out.surgery_ids.size(), nu = (int)out.physical_ids.size();
  out.B = IntMat(m, m);
  out.lkLK = IntMat(m, nu);
  out.frK.resize(nu);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) out.B.at(i, j) = t.lk(out.surgery_ids[i], out.surgery_ids[j]);
    for (int j = 0; j < nu; ++j) out.lkLK.at(i, j) = t.lk(out.surgery_ids[i], out.physical_ids[j]);
  }
  for (int j = 0; j < nu; ++j) out.frK[j] = t.comps[out.physical_ids[j]].writhe;
  return out;
}

}  // namespace nss
