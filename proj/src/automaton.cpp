#include "sbg/automaton.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

namespace sbg {
namespace {

// Powers are expanded by copying, so nested exponents multiply the state
// count; refuse to build automata past this budget.
constexpr StateId kMaxStates = 1u << 20;

struct Frag {
  StateId start;
  StateId accept;
};

class Builder {
 public:
  StateId add_state() {
    if (automaton_.state_count >= kMaxStates) {
      throw AutomatonTooLarge("movement expression expands to more than " +
                              std::to_string(kMaxStates) + " automaton states");
    }
    automaton_.letter_edges.emplace_back();
    automaton_.eps_edges.emplace_back();
    return automaton_.state_count++;
  }

  void add_eps(StateId from, StateId to) {
    automaton_.eps_edges[from].push_back(to);
  }

  void add_letter(StateId from, MoveLetter l, StateId to) {
    automaton_.letter_edges[from].emplace_back(l, to);
  }

  Frag build(const RegExpr& e) {
    switch (e.kind()) {
      case RegExpr::Kind::Letter: {
        StateId s = add_state();
        StateId t = add_state();
        add_letter(s, e.letter_value(), t);
        return {s, t};
      }
      case RegExpr::Kind::Concat: {
        Frag all = build(e.children().front());
        for (std::size_t i = 1; i < e.children().size(); ++i) {
          Frag next = build(e.children()[i]);
          add_eps(all.accept, next.start);
          all.accept = next.accept;
        }
        return all;
      }
      case RegExpr::Kind::Sum: {
        StateId s = add_state();
        StateId t = add_state();
        for (const RegExpr& child : e.children()) {
          Frag f = build(child);
          add_eps(s, f.start);
          add_eps(f.accept, t);
        }
        return {s, t};
      }
      case RegExpr::Kind::Power: {
        if (e.exponent() == 0) {
          StateId s = add_state();
          return {s, s};  // accepts exactly the empty word
        }
        Frag all = build(e.child());
        for (int i = 1; i < e.exponent(); ++i) {
          Frag next = build(e.child());
          add_eps(all.accept, next.start);
          all.accept = next.accept;
        }
        return all;
      }
      case RegExpr::Kind::Star: {
        StateId s = add_state();
        StateId t = add_state();
        Frag f = build(e.child());
        add_eps(s, f.start);
        add_eps(s, t);
        add_eps(f.accept, f.start);
        add_eps(f.accept, t);
        return {s, t};
      }
    }
    throw std::logic_error("unreachable regexp kind");
  }

  MoveAutomaton finish(Frag root) {
    automaton_.start = root.start;
    automaton_.accepting.assign(automaton_.state_count, false);
    automaton_.accepting[root.accept] = true;
    return std::move(automaton_);
  }

 private:
  MoveAutomaton automaton_;
};

void eps_close(const MoveAutomaton& a, std::vector<bool>& in_set,
               std::vector<StateId>& worklist) {
  while (!worklist.empty()) {
    StateId s = worklist.back();
    worklist.pop_back();
    for (StateId t : a.eps_edges[s]) {
      if (!in_set[t]) {
        in_set[t] = true;
        worklist.push_back(t);
      }
    }
  }
}

bool matches(SquareContent content, OnCond on) {
  switch (on) {
    case OnCond::Empty: return content == SquareContent::Empty;
    case OnCond::Opponent: return content == SquareContent::Opponent;
    case OnCond::Own: return content == SquareContent::Own;
  }
  return false;
}

std::uint64_t square_key(Coord sq) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(sq.x)) << 32) |
         static_cast<std::uint32_t>(sq.y);
}

}  // namespace

std::string to_string(const Word& w) {
  std::ostringstream out;
  for (const MoveLetter& l : w) {
    out << '(' << l.dx << ',' << l.dy << ',' << to_char(l.on) << ')';
  }
  return out.str();
}

MoveAutomaton compile(const RegExpr& expr) {
  Builder builder;
  Frag root = builder.build(expr);
  return builder.finish(root);
}

bool accepts(const MoveAutomaton& a, const Word& w) {
  if (a.state_count == 0) return false;
  std::vector<bool> current(a.state_count, false);
  std::vector<StateId> worklist;
  current[a.start] = true;
  worklist.push_back(a.start);
  eps_close(a, current, worklist);

  for (const MoveLetter& letter : w) {
    std::vector<bool> next(a.state_count, false);
    for (StateId s = 0; s < a.state_count; ++s) {
      if (!current[s]) continue;
      for (const auto& [l, t] : a.letter_edges[s]) {
        if (l == letter && !next[t]) {
          next[t] = true;
          worklist.push_back(t);
        }
      }
    }
    eps_close(a, next, worklist);
    current = std::move(next);
  }

  for (StateId s = 0; s < a.state_count; ++s) {
    if (current[s] && a.accepting[s]) return true;
  }
  return false;
}

std::vector<Coord> destinations(const MoveAutomaton& a,
                                const OccupancyView& view, Coord from) {
  std::vector<Coord> result;
  if (a.state_count == 0) return result;

  // Visited bitmap per square; squares are discovered on demand since the
  // automaton layer does not know the board dimensions.
  std::map<std::uint64_t, std::vector<bool>> visited;
  std::queue<std::pair<StateId, Coord>> queue;
  std::map<std::uint64_t, bool> is_destination;

  auto visit = [&](StateId s, Coord sq) {
    auto [it, inserted] = visited.try_emplace(square_key(sq));
    if (inserted) it->second.assign(a.state_count, false);
    if (it->second[s]) return;
    it->second[s] = true;
    queue.emplace(s, sq);
    if (a.accepting[s]) {
      auto [dit, fresh] = is_destination.try_emplace(square_key(sq), true);
      (void)dit;
      if (fresh) result.push_back(sq);
    }
  };

  visit(a.start, from);
  while (!queue.empty()) {
    auto [s, sq] = queue.front();
    queue.pop();
    for (StateId t : a.eps_edges[s]) visit(t, sq);
    for (const auto& [l, t] : a.letter_edges[s]) {
      Coord next{sq.x + l.dx, sq.y + l.dy};
      if (matches(view.at(next.x, next.y), l.on)) visit(t, next);
    }
  }

  std::sort(result.begin(), result.end());
  return result;
}

std::optional<Word> witness(const MoveAutomaton& a, const OccupancyView& view,
                            Coord from, Coord to) {
  if (a.state_count == 0) return std::nullopt;

  // Materialize the reachable part of the product graph so distances to
  // the goal can be computed on reversed edges.
  struct Node {
    StateId state;
    Coord sq;
  };
  std::map<std::pair<StateId, std::uint64_t>, int> ids;
  std::vector<Node> nodes;
  std::vector<std::vector<int>> eps_out;
  std::vector<std::vector<std::pair<MoveLetter, int>>> letter_out;

  auto intern = [&](StateId s, Coord sq) {
    auto [it, inserted] = ids.try_emplace({s, square_key(sq)}, -1);
    if (inserted) {
      it->second = static_cast<int>(nodes.size());
      nodes.push_back({s, sq});
      eps_out.emplace_back();
      letter_out.emplace_back();
    }
    return std::pair(it->second, inserted);
  };

  std::queue<int> bfs;
  bfs.push(intern(a.start, from).first);
  while (!bfs.empty()) {
    int id = bfs.front();
    bfs.pop();
    Node node = nodes[id];
    for (StateId t : a.eps_edges[node.state]) {
      auto [tid, fresh] = intern(t, node.sq);
      eps_out[id].push_back(tid);
      if (fresh) bfs.push(tid);
    }
    for (const auto& [l, t] : a.letter_edges[node.state]) {
      Coord next{node.sq.x + l.dx, node.sq.y + l.dy};
      if (!matches(view.at(next.x, next.y), l.on)) continue;
      auto [tid, fresh] = intern(t, next);
      letter_out[id].push_back({l, tid});
      if (fresh) bfs.push(tid);
    }
  }

  // Letters-to-go from every node, by 0-1 BFS on reversed edges.
  const int kInf = std::numeric_limits<int>::max();
  std::vector<int> dist(nodes.size(), kInf);
  std::vector<std::vector<int>> eps_in(nodes.size());
  std::vector<std::vector<int>> letter_in(nodes.size());
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    for (int t : eps_out[id]) eps_in[t].push_back(static_cast<int>(id));
    for (const auto& [l, t] : letter_out[id]) {
      letter_in[t].push_back(static_cast<int>(id));
    }
  }
  std::deque<int> deque;
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    if (a.accepting[nodes[id].state] && nodes[id].sq == to) {
      dist[id] = 0;
      deque.push_back(static_cast<int>(id));
    }
  }
  while (!deque.empty()) {
    int id = deque.front();
    deque.pop_front();
    for (int p : eps_in[id]) {
      if (dist[id] < dist[p]) {
        dist[p] = dist[id];
        deque.push_front(p);
      }
    }
    for (int p : letter_in[id]) {
      if (dist[id] != kInf && dist[id] + 1 < dist[p]) {
        dist[p] = dist[id] + 1;
        deque.push_back(p);
      }
    }
  }

  int start_id = intern(a.start, from).first;
  if (dist[start_id] == kInf) return std::nullopt;

  // Greedy reconstruction: among all shortest continuations pick the
  // lexicographically least letter at each step.
  Word word;
  std::vector<int> current{start_id};
  auto close_current = [&](std::vector<int> set) {
    std::vector<bool> seen(nodes.size(), false);
    std::vector<int> out;
    while (!set.empty()) {
      int id = set.back();
      set.pop_back();
      if (seen[id]) continue;
      seen[id] = true;
      out.push_back(id);
      for (int t : eps_out[id]) set.push_back(t);
    }
    return out;
  };
  current = close_current(current);
  int remaining = dist[start_id];
  while (remaining > 0) {
    std::optional<MoveLetter> best;
    for (int id : current) {
      for (const auto& [l, tid] : letter_out[id]) {
        if (dist[tid] == remaining - 1 && (!best || l < *best)) best = l;
      }
    }
    if (!best) return std::nullopt;
    std::vector<int> next;
    for (int id : current) {
      for (const auto& [l, tid] : letter_out[id]) {
        if (l == *best && dist[tid] == remaining - 1) next.push_back(tid);
      }
    }
    word.push_back(*best);
    current = close_current(std::move(next));
    --remaining;
  }
  return word;
}

}  // namespace sbg
