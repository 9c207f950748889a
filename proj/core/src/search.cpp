#include "hardboard/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <unordered_map>

namespace hardboard {

const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Achievable: return "achievable";
    case SearchOutcome::NotAchievable: return "not-achievable";
    case SearchOutcome::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Entry {
  int16_t achieve_min = std::numeric_limits<int16_t>::max();
  int16_t fail_max = -1;
};

// Bounded reachability is history-free: a minimal forcing strategy never
// revisits a position with the same side to move, so pruning repeats and
// memoizing per (position, side) keeps the root value exact.
class ObjectiveSearch {
 public:
  ObjectiveSearch(const BoardPosition& start, Color attacker, Objective obj,
                  Coord target, const FrozenMask* frozen,
                  const SearchLimits& limits)
      : board_(start),
        attacker_(attacker),
        obj_(obj),
        target_(target),
        frozen_(frozen),
        limits_(limits) {
    size_t cells = static_cast<size_t>(board_.width) * board_.height;
    uint64_t seed = 0x517cc1b727220a95ULL;
    zobrist_.resize(cells * 16);
    for (auto& z : zobrist_) z = splitmix64(seed);
    z_side_ = splitmix64(seed);
    z_tracked_.resize(cells + 1);
    for (auto& z : z_tracked_) z = splitmix64(seed);
    if (obj_ == Objective::Capture) tracked_ = target_;
    hash_ = full_hash();
  }

  SearchResult run(int ply_budget) {
    SearchResult result;
    if (met()) {
      result.outcome = SearchOutcome::Achievable;
      return result;
    }
    bool achieved = rec(ply_budget);
    result.nodes = nodes_;
    if (aborted_) {
      result.outcome = SearchOutcome::BudgetExhausted;
      return result;
    }
    result.outcome = achieved ? SearchOutcome::Achievable
                              : SearchOutcome::NotAchievable;
    if (achieved) result.principal_line = principal_line(ply_budget);
    return result;
  }

 private:
  size_t cell(Coord c) const {
    return static_cast<size_t>(c.y) * board_.width + c.x;
  }

  uint64_t full_hash() const {
    uint64_t h = board_.side_to_move == Color::Black ? z_side_ : 0;
    for (int y = 0; y < board_.height; ++y)
      for (int x = 0; x < board_.width; ++x) {
        uint8_t raw = board_.raw({x, y});
        if (raw) h ^= zobrist_[cell({x, y}) * 16 + raw];
      }
    h ^= z_tracked_[tracked_ ? cell(*tracked_) : z_tracked_.size() - 1];
    return h;
  }

  struct UndoExt {
    UndoRecord undo;
    std::optional<Coord> tracked_before;
    uint64_t hash_before;
  };

  UndoExt make(const Move& m) {
    UndoExt u{{}, tracked_, hash_};
    if (!m.is_pass) {
      uint8_t moving = board_.raw(m.from);
      uint8_t captured = board_.raw(m.to);
      hash_ ^= zobrist_[cell(m.from) * 16 + moving];
      if (captured) hash_ ^= zobrist_[cell(m.to) * 16 + captured];
      hash_ ^= zobrist_[cell(m.to) * 16 + moving];
      if (tracked_) {
        hash_ ^= z_tracked_[cell(*tracked_)];
        if (*tracked_ == m.to)
          tracked_.reset();  // captured
        else if (*tracked_ == m.from)
          tracked_ = m.to;
        hash_ ^= z_tracked_[tracked_ ? cell(*tracked_) : z_tracked_.size() - 1];
      }
    }
    hash_ ^= z_side_;
    u.undo = make_move(board_, m);
    return u;
  }

  void unmake(const UndoExt& u) {
    unmake_move(board_, u.undo);
    tracked_ = u.tracked_before;
    hash_ = u.hash_before;
  }

  bool met() const {
    switch (obj_) {
      case Objective::Reach: {
        auto p = board_.at(target_);
        return p && p->color == attacker_ && p->kind == PieceKind::Cannon;
      }
      case Objective::Capture:
        return !tracked_.has_value();
      case Objective::PreventReach:
        return false;  // callers invert a Reach search instead
    }
    return false;
  }

  // A mated defender holding a tracked general counts as captured: legal
  // play stops one ply short of the actual taking move.
  bool mate_counts(const std::vector<Move>& defender_moves) const {
    if (obj_ != Objective::Capture || !tracked_) return false;
    auto p = board_.at(*tracked_);
    if (!p || p->kind != PieceKind::General) return false;
    return defender_moves.empty() && in_check(board_, p->color);
  }

  int move_score(const Move& m, bool atk) const {
    if (m.is_pass) return -1;
    int score = 0;
    if (!board_.empty_at(m.to)) score += 1000;
    if (atk) {
      auto p = board_.at(m.from);
      if (p && p->kind == PieceKind::Cannon) {
        int before = std::abs(m.from.x - target_.x) +
                     std::abs(m.from.y - target_.y);
        int after =
            std::abs(m.to.x - target_.x) + std::abs(m.to.y - target_.y);
        score += (before - after) * 10;
      }
    }
    return score;
  }

  bool rec(int remaining) {
    if (aborted_) return false;
    if (++nodes_ > limits_.max_nodes) {
      aborted_ = true;
      return false;
    }
    if (remaining <= 0) return false;

    auto& entry = memo_[hash_];
    if (remaining >= entry.achieve_min) return true;
    if (remaining <= entry.fail_max) return false;

    for (uint64_t h : path_)
      if (h == hash_) return false;  // repetition, scored against attacker

    bool atk = board_.side_to_move == attacker_;
    auto moves = legal_moves_inplace(board_, frozen_);
    if (moves.empty()) {
      if (!atk && mate_counts(moves)) return true;
      return false;
    }

    std::stable_sort(moves.begin(), moves.end(),
                     [&](const Move& a, const Move& b) {
                       return move_score(a, atk) > move_score(b, atk);
                     });

    path_.push_back(hash_);
    bool achieved = atk ? false : true;
    for (const Move& m : moves) {
      UndoExt u = make(m);
      bool child;
      if (atk && met())
        child = true;
      else
        child = rec(remaining - 1);
      unmake(u);
      if (aborted_) {
        path_.pop_back();
        return false;
      }
      if (atk && child) {
        achieved = true;
        break;
      }
      if (!atk && !child) {
        achieved = false;
        break;
      }
    }
    path_.pop_back();

    auto& e = memo_[hash_];  // may have rehashed during children
    if (achieved)
      e.achieve_min = std::min<int16_t>(e.achieve_min,
                                        static_cast<int16_t>(remaining));
    else
      e.fail_max =
          std::max<int16_t>(e.fail_max, static_cast<int16_t>(remaining));
    return achieved;
  }

  // Replays the proven strategy: attacker picks a fastest achieving move,
  // defender the longest resistance, both read from the memo.
  std::vector<Move> principal_line(int ply_budget) {
    std::vector<Move> line;
    int remaining = ply_budget;
    while (remaining > 0 && !met()) {
      bool atk = board_.side_to_move == attacker_;
      auto moves = legal_moves_inplace(board_, frozen_);
      if (moves.empty()) break;
      const Move* chosen = nullptr;
      int best = atk ? std::numeric_limits<int>::max()
                     : std::numeric_limits<int>::min();
      std::vector<UndoExt> undos;
      for (const Move& m : moves) {
        UndoExt u = make(m);
        int value;
        if (atk && met()) {
          value = 0;
        } else {
          auto it = memo_.find(hash_);
          if (it == memo_.end() ||
              it->second.achieve_min > remaining - 1) {
            value = atk ? std::numeric_limits<int>::max()
                        : -1;  // not a proven continuation
          } else {
            value = it->second.achieve_min;
          }
        }
        unmake(u);
        if (atk ? value < best : value > best) {
          best = value;
          chosen = &m;
        }
      }
      if (!chosen || (atk && best == std::numeric_limits<int>::max())) break;
      line.push_back(*chosen);
      make(*chosen);
      --remaining;
    }
    return line;
  }

  BoardPosition board_;
  Color attacker_;
  Objective obj_;
  Coord target_;
  const FrozenMask* frozen_;
  SearchLimits limits_;

  std::optional<Coord> tracked_;
  std::vector<uint64_t> zobrist_, z_tracked_;
  uint64_t z_side_ = 0, hash_ = 0;
  uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::unordered_map<uint64_t, Entry> memo_;
  std::vector<uint64_t> path_;
};

}  // namespace

SearchResult search_objective(const BoardPosition& start, Color attacker,
                              Objective objective, Coord target,
                              int ply_budget, const FrozenMask* frozen,
                              const SearchLimits& limits) {
  ObjectiveSearch search(start, attacker, objective, target, frozen, limits);
  return search.run(ply_budget);
}

}  // namespace hardboard
