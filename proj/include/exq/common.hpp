#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace exq {

enum class ErrorKind {
  Parse,
  DuplicateId,
  UnknownId,
  MissingIdentity,
  BadIdentity,
  NonComposableEntry,
  MissingComposite,
  ConflictingEntry,
  AssociativityViolation,
  UnitLawViolation,
  SizeLimitExceeded,
  FunctorLawViolation,
  NaturalityViolation,
  TargetMismatch,
  EndpointMismatch,
  NoProductStructure,
  MonoidalLawViolation,
  IllDefinedComposition,
  LawViolation,
  ChosenSquareMismatch,
  InvalidConfig,
  InvalidKind,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Enumeration and construction limits shared by every module.
struct Caps {
  int max_arrows = 64;        // validated input categories
  int max_set_size = 8;       // FinSet values of input set functors
  int kan_set_size = 2;       // value sizes tried by the Kan-transport check
  long max_set_functors = 200000;
  long max_cells = 400000;    // elements of constructed categories / coend carriers
};

class UnionFind {
 public:
  explicit UnionFind(int n = 0) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int size() const { return static_cast<int>(parent_.size()); }
  int add() {
    parent_.push_back(size());
    return size() - 1;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // The smaller root survives, so every root is the minimum of its class.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) parent_[b] = a; else parent_[a] = b;
    return true;
  }
  // Dense class labels 0..k-1, numbered by first occurrence.
  std::vector<int> labels(int* count = nullptr);

 private:
  std::vector<int> parent_;
};

std::uint64_t fnv1a(std::string_view s);
std::uint64_t splitmix64(std::uint64_t x);
std::string hex64(std::uint64_t x);

// "(a|b|c)" style canonical tuple identifier.
std::string tuple_id(std::initializer_list<std::string_view> parts);
std::string tuple_id(const std::vector<std::string>& parts);

}  // namespace exq
