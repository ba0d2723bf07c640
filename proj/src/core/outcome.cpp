#include "deriv/error.hpp"
#include "deriv/outcome.hpp"

namespace deriv {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::DuplicateRuleName: return "DuplicateRuleName";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DecodeError: return "DecodeError";
    case ErrorKind::IllFormed: return "IllFormed";
    case ErrorKind::NoMatchingBinder: return "NoMatchingBinder";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::UnknownState: return "UnknownState";
    case ErrorKind::UnknownLetter: return "UnknownLetter";
    case ErrorKind::MalformedChain: return "MalformedChain";
    case ErrorKind::InvalidAutomaton: return "InvalidAutomaton";
  }
  return "?";
}

const char* to_string(RejectKind kind) {
  switch (kind) {
    case RejectKind::NoRule: return "NoRule";
    case RejectKind::WrongConclusion: return "WrongConclusion";
    case RejectKind::UnknownRuleName: return "UnknownRuleName";
    case RejectKind::ArityMismatch: return "ArityMismatch";
    case RejectKind::RuleUndefined: return "RuleUndefined";
    case RejectKind::HypNotInContext: return "HypNotInContext";
    case RejectKind::ContextMismatch: return "ContextMismatch";
    case RejectKind::ShapeMismatch: return "ShapeMismatch";
    case RejectKind::UnboundVariable: return "UnboundVariable";
    case RejectKind::IllFormed: return "IllFormed";
  }
  return "?";
}

std::string render_path(const Path& path) {
  if (path.empty()) return "/";
  std::string out;
  for (auto i : path) {
    out += '/';
    out += std::to_string(i);
  }
  return out;
}

std::string Rejection::describe() const {
  return "rejected at " + render_path(path) + " (" + to_string(kind) + "): " + reason;
}

}  // namespace deriv
