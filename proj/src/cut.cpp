#include "m0n/cut.hpp"

#include "m0n/error.hpp"

namespace m0n {

bool operator<(const Cut& a, const Cut& b) {
  if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
  if (a.first_ != b.first_) return a.first_ < b.first_;
  return a.second_ < b.second_;
}

Cut canonicalize_cut(LabelSet a, LabelSet b, int n) {
  if (a.size() < 2 || b.size() < 2) {
    throw Error(ErrorCode::PartTooSmall,
                "cut part " + to_string(a.size() < 2 ? a : b) + " has fewer than 2 labels");
  }
  if (a.intersects(b)) {
    throw Error(ErrorCode::NotAPartition,
                "parts " + to_string(a) + " and " + to_string(b) + " overlap");
  }
  if (a.size() + b.size() != static_cast<std::size_t>(n) || a.min() < 1 || b.min() < 1 ||
      a.max() > n || b.max() > n) {
    throw Error(ErrorCode::NotAPartition, "parts " + to_string(a) + " and " + to_string(b) +
                                              " do not cover {1.." + std::to_string(n) + "}");
  }
  if (!a.contains(1)) std::swap(a, b);
  return Cut(std::move(a), std::move(b), n);
}

Cut cut_from_part(const LabelSet& part, int n) {
  return canonicalize_cut(part, LabelSet::range(1, n).minus(part), n);
}

bool crosses(const Cut& a, const Cut& b) {
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorCode::AmbientMismatch, "cuts " + to_string(a) + " and " + to_string(b) +
                                                " have different label sets");
  }
  return a.first().intersects(b.first()) && a.first().intersects(b.second()) &&
         a.second().intersects(b.first()) && a.second().intersects(b.second());
}

std::string to_string(const Cut& cut) {
  std::string out;
  auto append = [&out](const LabelSet& part) {
    bool first = true;
    for (Label l : part) {
      if (!first) out += ',';
      out += std::to_string(l);
      first = false;
    }
  };
  append(cut.first());
  out += '|';
  append(cut.second());
  return out;
}

}  // namespace m0n
