#include "klv/partition.hpp"

#include <numeric>
#include <sstream>

#include "klv/error.hpp"

namespace klv::core {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail(Status::InvalidArg, "partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      fail(Status::InvalidArg, "partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

int Partition::part(int i) const {
  if (i < 1) fail(Status::InvalidArg, "partition parts are 1-indexed");
  return i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

int Partition::conj_part(int j) const {
  if (j < 1) fail(Status::InvalidArg, "partition parts are 1-indexed");
  int count = 0;
  for (int p : parts_)
    if (p >= j) ++count;
  return count;
}

Partition Partition::conjugate() const {
  std::vector<int> cp;
  int cols = parts_.empty() ? 0 : parts_[0];
  cp.reserve(static_cast<size_t>(cols));
  for (int j = 1; j <= cols; ++j) cp.push_back(conj_part(j));
  return Partition(std::move(cp));
}

std::string Partition::str() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ",";
    out << parts_[i];
  }
  out << "]";
  return out.str();
}

Rat z_factor(const Partition& mu) {
  Int result = 1;
  int run_part = 0, run_len = 0;
  auto flush = [&]() {
    if (!run_len) return;
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(run_part),
                  static_cast<unsigned long>(run_len));
    result *= p;
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(run_len));
    result *= f;
  };
  for (int p : mu.parts()) {
    if (p == run_part) {
      ++run_len;
    } else {
      flush();
      run_part = p;
      run_len = 1;
    }
  }
  flush();
  return Rat(result);
}

int arm(const Partition& mu, int i, int j) { return mu.part(i) - j; }

int leg(const Partition& mu, int i, int j) { return mu.conj_part(j) - i; }

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    prefix.push_back(p);
    gen_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) fail(Status::InvalidArg, "enumerate_partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  gen_partitions(n, n, prefix, out);
  return out;
}

std::vector<Partition> enumerate_partitions_up_to(int d) {
  std::vector<Partition> out;
  for (int n = 0; n <= d; ++n) {
    auto part = enumerate_partitions(n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

int tuple_size(const PartitionTuple& t) {
  int n = 0;
  for (const auto& p : t) n += p.size();
  return n;
}

std::string tuple_str(const PartitionTuple& t) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) out << ",";
    out << t[i].str();
  }
  out << ")";
  return out.str();
}

namespace {

void gen_compositions(int slots, int remaining, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    if (remaining == 0) out.push_back(prefix);
    return;
  }
  for (int first = remaining; first >= 0; --first) {
    prefix.push_back(first);
    gen_compositions(slots - 1, remaining - first, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PartitionTuple> enumerate_tuples(int r, int n) {
  if (r < 0 || n < 0) fail(Status::InvalidArg, "enumerate_tuples: negative arguments");
  std::vector<PartitionTuple> out;
  if (r == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<std::vector<int>> comps;
  std::vector<int> prefix;
  gen_compositions(r, n, prefix, comps);
  for (const auto& comp : comps) {
    std::vector<std::vector<Partition>> slots;
    slots.reserve(comp.size());
    for (int size : comp) slots.push_back(enumerate_partitions(size));
    std::vector<size_t> odo(comp.size(), 0);
    while (true) {
      PartitionTuple t;
      t.reserve(comp.size());
      for (size_t i = 0; i < comp.size(); ++i) t.push_back(slots[i][odo[i]]);
      out.push_back(std::move(t));
      size_t i = comp.size();
      while (i > 0) {
        --i;
        if (++odo[i] < slots[i].size()) break;
        odo[i] = 0;
        if (i == 0) goto next_comp;
      }
      if (comp.empty()) break;
    }
  next_comp:;
  }
  return out;
}

}  // namespace klv::core
