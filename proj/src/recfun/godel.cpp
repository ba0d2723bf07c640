#include "deriv/error.hpp"
#include "deriv/recfun.hpp"

namespace deriv::recfun {

namespace {

constexpr unsigned kZero = 0, kSucc = 1, kProj = 2, kComp = 3, kRec = 4, kMu = 5;

// Bounds on decoded sizes; any program this large is beyond what eval or the
// printer can handle anyway.
constexpr std::size_t kMaxIndex = std::size_t{1} << 32;
constexpr std::size_t kMaxListLength = std::size_t{1} << 16;

[[noreturn]] void decode_error(const std::string& why) { throw Error(ErrorKind::DecodeError, why); }

std::size_t small(const Natural& n, std::size_t limit, const char* what) {
  if (n > limit) decode_error(std::string(what) + " out of range");
  return n.convert_to<std::size_t>();
}

Natural encode_list(std::span<const Program> items) {
  Natural nest = 0;
  for (std::size_t k = items.size(); k-- > 0;) nest = pair(godel(items[k]), nest);
  return pair(Natural(items.size()), nest);
}

Program decode(const Natural& code) {
  auto [tag, payload] = unpair(code);
  if (tag > kMu) decode_error("unknown constructor tag " + tag.str());
  switch (tag.convert_to<unsigned>()) {
    case kZero: return Program::zero(small(payload, kMaxIndex, "zero arity"));
    case kSucc:
      if (payload != 0) decode_error("succ carries a nonzero payload");
      return Program::succ();
    case kProj: {
      auto [n, i] = unpair(payload);
      return Program::proj(small(n, kMaxIndex, "proj arity"), small(i, kMaxIndex, "proj index"));
    }
    case kComp: {
      auto [f, list] = unpair(payload);
      auto [length, nest] = unpair(list);
      const std::size_t m = small(length, kMaxListLength, "comp argument count");
      if (m == 0) decode_error("comp with no inner programs");
      std::vector<Program> gs;
      gs.reserve(m);
      for (std::size_t k = 0; k < m; ++k) {
        auto [head, tail] = unpair(nest);
        gs.push_back(decode(head));
        nest = std::move(tail);
      }
      if (nest != 0) decode_error("comp argument list longer than its length");
      return Program::comp(decode(f), std::move(gs));
    }
    case kRec: {
      auto [g, h] = unpair(payload);
      return Program::rec(decode(g), decode(h));
    }
    case kMu: return Program::mu(decode(payload));
  }
  decode_error("unknown constructor");
}

}  // namespace

Natural pair(const Natural& a, const Natural& b) {
  const Natural s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<Natural, Natural> unpair(const Natural& z) {
  // w = floor((sqrt(8z + 1) - 1) / 2) is the diagonal a + b.
  const Natural disc = 8 * z + 1;
  Natural w = (boost::multiprecision::sqrt(disc) - 1) / 2;
  const Natural t = w * (w + 1) / 2;
  Natural b = z - t;
  return {w - b, std::move(b)};
}

Natural godel(const Program& p) {
  using K = Program::Kind;
  switch (p.kind) {
    case K::Zero: return pair(kZero, Natural(p.n));
    case K::Succ: return pair(kSucc, 0);
    case K::Proj: return pair(kProj, pair(Natural(p.n), Natural(p.i)));
    case K::Comp:
      return pair(kComp, pair(godel(p.subs[0]), encode_list(std::span<const Program>(p.subs).subspan(1))));
    case K::Rec: return pair(kRec, pair(godel(p.subs[0]), godel(p.subs[1])));
    case K::Mu: return pair(kMu, godel(p.subs[0]));
  }
  throw Error(ErrorKind::IllFormed, "unknown constructor");
}

Program ungodel(const Natural& code) {
  if (code < 0) decode_error("negative code");
  Program p = decode(code);
  auto arity = arity_of(p);
  if (!arity) decode_error("code decodes to an ill-formed program: " + arity.rejection().describe());
  return p;
}

}  // namespace deriv::recfun
