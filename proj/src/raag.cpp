#include "hraag/raag.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "hraag/errors.hpp"
#include "hraag/parallel.hpp"

namespace hraag {

RaagWord parse_word(const RaagPresentation& p, std::string_view text) {
  RaagWord w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    bool inv = false;
    std::string name = token;
    constexpr std::string_view suffix = "^-1";
    if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
      inv = true;
      name.resize(name.size() - suffix.size());
    }
    auto idx = p.graph().index_of(name);
    if (!idx) throw InputError("unknown generator '" + name + "' in word '" + std::string(text) + "'");
    w.letters.push_back({static_cast<std::uint32_t>(*idx), inv});
  }
  return w;
}

std::string format_word(const RaagPresentation& p, const std::vector<Letter>& letters) {
  std::string out;
  for (const auto& l : letters) {
    if (!out.empty()) out += ' ';
    out += p.name(l.gen);
    if (l.inverse) out += "^-1";
  }
  return out;
}

RaagWord inverse(const RaagWord& w) {
  RaagWord out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(it->inverted());
  return out;
}

RaagWord concat(const RaagWord& u, const RaagWord& v) {
  RaagWord out = u;
  out.letters.insert(out.letters.end(), v.letters.begin(), v.letters.end());
  return out;
}

RaagWord commutator(const RaagWord& u, const RaagWord& v) {
  return concat(concat(u, v), concat(inverse(u), inverse(v)));
}

namespace {

void validate(const RaagPresentation& p, const std::vector<Letter>& letters) {
  for (const auto& l : letters) {
    if (l.gen >= p.rank()) {
      throw InputError("generator index " + std::to_string(l.gen) + " outside presentation of rank " +
                       std::to_string(p.rank()));
    }
  }
}

// Appends x to a reduced word, cancelling against an inverse reachable
// through letters that commute with x.
void push_reduced(const RaagPresentation& p, std::vector<Letter>& r, Letter x) {
  for (std::size_t i = r.size(); i-- > 0;) {
    const Letter y = r[i];
    if (y.gen == x.gen) {
      if (y.inverse != x.inverse) {
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(i));
        return;
      }
      break;
    }
    if (!p.commute(y.gen, x.gen)) break;
  }
  r.push_back(x);
}

// Lexicographically least rearrangement of a reduced word.
std::vector<Letter> lex_least(const RaagPresentation& p, std::vector<Letter> r) {
  std::vector<Letter> out;
  out.reserve(r.size());
  while (!r.empty()) {
    std::size_t best = 0;
    bool have = false;
    for (std::size_t i = 0; i < r.size(); ++i) {
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j) movable = p.commute(r[j].gen, r[i].gen);
      if (!movable) continue;
      if (!have || r[i] < r[best]) {
        best = i;
        have = true;
      }
    }
    out.push_back(r[best]);
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

// Whether w.x is a normal form, given that w is one.
bool extends_normal_form(const RaagPresentation& p, const std::vector<Letter>& w, Letter x) {
  for (std::size_t i = w.size(); i-- > 0;) {
    const Letter y = w[i];
    if (y.gen == x.gen) return y.inverse == x.inverse;
    if (!p.commute(y.gen, x.gen)) return true;
    if (x < y) return false;
  }
  return true;
}

}  // namespace

std::vector<Letter> reduce(const RaagPresentation& p, const std::vector<Letter>& letters) {
  validate(p, letters);
  std::vector<Letter> r;
  r.reserve(letters.size());
  for (const auto& x : letters) push_reduced(p, r, x);
  return r;
}

NormalForm normal_form(const RaagPresentation& p, const RaagWord& w) {
  return {lex_least(p, reduce(p, w.letters))};
}

bool is_identity(const RaagPresentation& p, const RaagWord& w) { return reduce(p, w.letters).empty(); }

bool is_normal_form(const RaagPresentation& p, const std::vector<Letter>& letters) {
  validate(p, letters);
  std::vector<Letter> prefix;
  prefix.reserve(letters.size());
  for (const auto& x : letters) {
    if (!extends_normal_form(p, prefix, x)) return false;
    prefix.push_back(x);
  }
  return true;
}

HomVerification verify_hom(const RaagPresentation& source, const RaagPresentation& target,
                           const std::map<std::string, RaagWord>& images) {
  std::vector<RaagWord> ordered;
  ordered.reserve(source.rank());
  for (const auto& v : source.graph().vertices()) {
    auto it = images.find(v);
    if (it == images.end()) throw InputError("no image given for generator '" + v + "'");
    validate(target, it->second.letters);
    ordered.push_back(it->second);
  }
  for (const auto& [name, _] : images) {
    if (!source.graph().contains(name)) throw InputError("image given for unknown generator '" + name + "'");
  }

  HomVerification out;
  for (auto [u, v] : source.graph().edges()) {
    RaagWord rel = commutator(ordered[u], ordered[v]);
    auto nf = normal_form(target, rel);
    if (!nf.empty()) {
      out.failed_relator = LabelPair{source.name(static_cast<std::uint32_t>(u)),
                                     source.name(static_cast<std::uint32_t>(v))};
      out.failed_image = format_word(target, nf.letters);
      return out;
    }
  }
  out.hom = RaagHom{source, target, std::move(ordered)};
  return out;
}

RaagWord apply_hom(const RaagHom& h, const RaagWord& w) {
  RaagWord out;
  for (const auto& l : w.letters) {
    const RaagWord& img = h.images.at(l.gen);
    if (!l.inverse) {
      out.letters.insert(out.letters.end(), img.letters.begin(), img.letters.end());
    } else {
      for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it) out.letters.push_back(it->inverted());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class KernelBranch {
 public:
  KernelBranch(const RaagHom& h, std::size_t length, std::uint64_t budget, std::atomic<std::uint64_t>& counter)
      : h_(h), length_(length), budget_(budget), counter_(counter) {
    alphabet_.reserve(h.source.rank() * 2);
    for (std::uint32_t g = 0; g < h.source.rank(); ++g) {
      alphabet_.push_back({g, false});
      alphabet_.push_back({g, true});
    }
  }

  // First witness of exactly `length_` letters starting with `first`.
  std::optional<std::vector<Letter>> run(Letter first) {
    word_.assign(1, first);
    image_.clear();
    push_image(first);
    return descend();
  }

  std::uint64_t checked() const noexcept { return checked_; }

 private:
  void push_image(Letter l) {
    marks_.push_back(image_.size());
    const RaagWord& img = h_.images[l.gen];
    if (!l.inverse) {
      image_.insert(image_.end(), img.letters.begin(), img.letters.end());
    } else {
      for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it) image_.push_back(it->inverted());
    }
  }

  void pop_image() {
    image_.resize(marks_.back());
    marks_.pop_back();
  }

  std::optional<std::vector<Letter>> descend() {
    if (word_.size() == length_) {
      ++checked_;
      const std::uint64_t seen = counter_.fetch_add(1) + 1;
      if (budget_ != 0 && seen > budget_) {
        throw BudgetExceeded("kernel search exceeded budget of " + std::to_string(budget_) +
                                 " normal forms at length " + std::to_string(length_),
                             seen);
      }
      if (reduce(h_.target, image_).empty()) return word_;
      return std::nullopt;
    }
    for (const Letter x : alphabet_) {
      if (!extends_normal_form(h_.source, word_, x)) continue;
      word_.push_back(x);
      push_image(x);
      auto found = descend();
      pop_image();
      word_.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  }

  const RaagHom& h_;
  std::size_t length_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& counter_;
  std::vector<Letter> alphabet_;
  std::vector<Letter> word_;
  std::vector<Letter> image_;
  std::vector<std::size_t> marks_;
  std::uint64_t checked_ = 0;
};

}  // namespace

KernelSearchResult kernel_ball_search(const RaagHom& h, std::size_t max_len, KernelSearchOptions options) {
  if (max_len == 0) throw PreconditionError("kernel search needs max_len >= 1");
  const std::size_t letters = h.source.rank() * 2;
  std::atomic<std::uint64_t> counter{0};
  KernelSearchResult result;

  struct BranchOutcome {
    std::optional<std::vector<Letter>> witness;
    std::uint64_t checked = 0;
  };

  for (std::size_t len = 1; len <= max_len; ++len) {
    auto outcomes = parallel_map<BranchOutcome>(letters, options.workers, [&](std::size_t i) {
      KernelBranch branch(h, len, options.node_budget, counter);
      Letter first{static_cast<std::uint32_t>(i / 2), i % 2 == 1};
      BranchOutcome o;
      o.witness = branch.run(first);
      o.checked = branch.checked();
      return o;
    });
    for (const auto& o : outcomes) result.normal_forms_checked += o.checked;
    for (auto& o : outcomes) {
      if (o.witness) {
        result.witness = RaagWord{std::move(*o.witness)};
        return result;
      }
    }
  }
  return result;
}

}  // namespace hraag
