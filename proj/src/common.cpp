#include "exq/common.hpp"

#include <cstdio>

namespace exq {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::BadIdentity: return "BadIdentity";
    case ErrorKind::NonComposableEntry: return "NonComposableEntry";
    case ErrorKind::MissingComposite: return "MissingComposite";
    case ErrorKind::ConflictingEntry: return "ConflictingEntry";
    case ErrorKind::AssociativityViolation: return "AssociativityViolation";
    case ErrorKind::UnitLawViolation: return "UnitLawViolation";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::FunctorLawViolation: return "FunctorLawViolation";
    case ErrorKind::NaturalityViolation: return "NaturalityViolation";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::NoProductStructure: return "NoProductStructure";
    case ErrorKind::MonoidalLawViolation: return "MonoidalLawViolation";
    case ErrorKind::IllDefinedComposition: return "IllDefinedComposition";
    case ErrorKind::LawViolation: return "LawViolation";
    case ErrorKind::ChosenSquareMismatch: return "ChosenSquareMismatch";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::InvalidKind: return "InvalidKind";
  }
  return "Error";
}

std::vector<int> UnionFind::labels(int* count) {
  std::vector<int> root_label(parent_.size(), -1), out(parent_.size());
  int next = 0;
  for (int i = 0; i < size(); ++i) {
    int r = find(i);
    if (root_label[r] < 0) root_label[r] = next++;
    out[i] = root_label[r];
  }
  if (count) *count = next;
  return out;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string tuple_id(std::initializer_list<std::string_view> parts) {
  std::string s = "(";
  bool first = true;
  for (auto p : parts) {
    if (!first) s += '|';
    s += p;
    first = false;
  }
  return s + ")";
}

std::string tuple_id(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '|';
    s += parts[i];
  }
  return s + ")";
}

}  // namespace exq
