#include <algorithm>
#include <string>

#include "dicot/errors.hpp"
#include "dicot/forms.hpp"

namespace dicot {
namespace {

void normalize(std::vector<FormId>& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

}  // namespace

Store::Store() : chunks_(std::make_unique<std::unique_ptr<Node[]>[]>(kMaxChunks)) {
  intern({}, {});
}

Store::~Store() = default;

std::size_t Store::hash_form(const GameForm& f) {
  std::uint64_t h = f.left.size();
  MixHash mix;
  for (FormId g : f.left) h = mix(h ^ g.value);
  h = mix(h ^ 0x7c);
  for (FormId g : f.right) h = mix(h ^ g.value);
  return static_cast<std::size_t>(h);
}

FormId Store::intern(std::vector<FormId> left, std::vector<FormId> right) {
  if (left.empty() != right.empty()) {
    throw DicotViolation(left.empty() ? "form has Right options but no Left options"
                                      : "form has Left options but no Right options");
  }
  normalize(left);
  normalize(right);
  const std::size_t known = size();
  for (const auto* side : {&left, &right}) {
    for (FormId g : *side) {
      if (g.value >= known) throw UnknownId("unknown form id " + std::to_string(g.value));
    }
  }

  GameForm candidate{std::move(left), std::move(right)};
  const std::size_t h = hash_form(candidate);

  std::lock_guard lock(intern_mutex_);
  auto [first, last] = index_.equal_range(h);
  for (auto it = first; it != last; ++it) {
    const GameForm& existing = node(FormId{it->second}).form;
    if (existing.left == candidate.left && existing.right == candidate.right) {
      return FormId{it->second};
    }
  }

  const std::size_t id = size_.load(std::memory_order_relaxed);
  if (id >= kChunkSize * kMaxChunks) throw BoundExceeded("form store is full");
  auto& chunk = chunks_[id >> kChunkBits];
  if (!chunk) chunk = std::make_unique<Node[]>(kChunkSize);

  Node& slot = chunk[id & (kChunkSize - 1)];
  unsigned birthday = 0;
  for (const auto* side : {&candidate.left, &candidate.right}) {
    for (FormId g : *side) birthday = std::max(birthday, node(g).birthday + 1);
  }
  // *n has identical sides holding exactly *0..*(n-1); sorted ids list them
  // in that order because each nimber is interned after its options.
  int nimber = -1;
  if (candidate.left == candidate.right) {
    nimber = static_cast<int>(candidate.left.size());
    for (std::size_t i = 0; i < candidate.left.size(); ++i) {
      if (node(candidate.left[i]).nimber != static_cast<int>(i)) {
        nimber = -1;
        break;
      }
    }
  }
  slot.form = std::move(candidate);
  slot.birthday = birthday;
  slot.nimber = nimber;

  index_.emplace(h, static_cast<std::uint32_t>(id));
  size_.store(id + 1, std::memory_order_release);
  return FormId{static_cast<std::uint32_t>(id)};
}

std::optional<unsigned> Store::nimber_value(FormId g) const {
  const int n = node(g).nimber;
  if (n < 0) return std::nullopt;
  return static_cast<unsigned>(n);
}

FormId Store::nimber(unsigned n) {
  FormId current = zero();
  std::vector<FormId> options;
  for (unsigned k = 1; k <= n; ++k) {
    options.push_back(current);
    current = intern(options, options);
  }
  return current;
}

FormId Store::conjugate(FormId g) {
  if (g == zero()) return g;
  if (auto hit = conjugate_memo_.find(g.value)) return *hit;
  const GameForm& f = form(g);
  std::vector<FormId> left, right;
  left.reserve(f.right.size());
  right.reserve(f.left.size());
  for (FormId r : f.right) left.push_back(conjugate(r));
  for (FormId l : f.left) right.push_back(conjugate(l));
  const FormId result = intern(std::move(left), std::move(right));
  conjugate_memo_.insert(result.value, g);
  return conjugate_memo_.insert(g.value, result);
}

FormId Store::sum(FormId g, FormId h) {
  if (g == zero()) return h;
  if (h == zero()) return g;
  if (h < g) std::swap(g, h);
  const std::uint64_t key = pair_key(g, h);
  if (auto hit = sum_memo_.find(key)) return *hit;

  const GameForm& fg = form(g);
  const GameForm& fh = form(h);
  std::vector<FormId> left, right;
  left.reserve(fg.left.size() + fh.left.size());
  right.reserve(fg.right.size() + fh.right.size());
  for (FormId x : fg.left) left.push_back(sum(x, h));
  for (FormId x : fh.left) left.push_back(sum(g, x));
  for (FormId x : fg.right) right.push_back(sum(x, h));
  for (FormId x : fh.right) right.push_back(sum(g, x));
  return sum_memo_.insert(key, intern(std::move(left), std::move(right)));
}

FormId Store::adjoint(FormId g) {
  if (auto hit = adjoint_memo_.find(g.value)) return *hit;
  const GameForm& f = form(g);
  FormId result;
  if (f.left.empty() && f.right.empty()) {
    result = star();
  } else {
    // Four cases in general; dicots only reach the first and the last.
    std::vector<FormId> left, right;
    for (FormId r : f.right) left.push_back(adjoint(r));
    for (FormId l : f.left) right.push_back(adjoint(l));
    if (left.empty()) left.push_back(zero());
    if (right.empty()) right.push_back(zero());
    result = intern(std::move(left), std::move(right));
  }
  return adjoint_memo_.insert(g.value, result);
}

std::vector<FormId> Store::followers(FormId g) const {
  std::vector<FormId> seen{g};
  std::vector<FormId> stack{g};
  std::vector<bool> visited(g.value + 1, false);
  visited[g.value] = true;
  while (!stack.empty()) {
    const FormId cur = stack.back();
    stack.pop_back();
    for (const auto side : {left(cur), right(cur)}) {
      for (FormId x : side) {
        if (!visited[x.value]) {
          visited[x.value] = true;
          seen.push_back(x);
          stack.push_back(x);
        }
      }
    }
  }
  std::sort(seen.begin(), seen.end());
  return seen;
}

}  // namespace dicot
