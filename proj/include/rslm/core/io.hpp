#ifndef RSLM_CORE_IO_HPP_
#define RSLM_CORE_IO_HPP_

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rslm/core/instance.hpp"

namespace rslm {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

template <class M>
void write_rows(std::ostream& os, const M& mat) {
  for (std::size_t i = 0; i < mat.rows(); ++i) {
    for (std::size_t j = 0; j < mat.cols(); ++j) os << (j ? " " : "") << mat(i, j);
    os << '\n';
  }
}

class LineReader {
 public:
  explicit LineReader(std::istream& is) {
    std::string s;
    std::size_t no = 0;
    while (std::getline(is, s)) {
      ++no;
      if (!s.empty() && s.back() == '\r') s.pop_back();
      const auto b = s.find_first_not_of(" \t");
      if (b == std::string::npos) continue;
      const auto e = s.find_last_not_of(" \t");
      lines_.emplace_back(no, s.substr(b, e - b + 1));
    }
  }

  bool done() const { return pos_ == lines_.size(); }
  std::size_t line_no() const { return done() ? (lines_.empty() ? 1 : lines_.back().first + 1) : lines_[pos_].first; }

  const std::string& peek() const {
    if (done()) throw ParseError(line_no(), "unexpected end of file");
    return lines_[pos_].second;
  }
  const std::string& next() {
    const auto& s = peek();
    ++pos_;
    return s;
  }
  void expect(std::string_view tag) {
    const std::size_t no = line_no();
    if (next() != tag) throw ParseError(no, "expected '" + std::string(tag) + "'");
  }

  std::vector<std::uint64_t> numbers(std::size_t count, std::uint64_t bound) {
    const std::size_t no = line_no();
    std::istringstream ss(next());
    std::vector<std::uint64_t> out;
    std::string tok;
    while (ss >> tok) {
      std::uint64_t v = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || p != tok.data() + tok.size()) throw ParseError(no, "bad token '" + tok + "'");
      if (v >= bound) throw ParseError(no, "token " + tok + " out of range (must be < " + std::to_string(bound) + ")");
      out.push_back(v);
    }
    if (out.size() != count)
      throw ParseError(no, "expected " + std::to_string(count) + " tokens, found " + std::to_string(out.size()));
    return out;
  }

 private:
  std::vector<std::pair<std::size_t, std::string>> lines_;
  std::size_t pos_ = 0;
};

template <class Field>
Matrix<Field> read_block(LineReader& in, const Field& F, std::size_t rows, std::size_t cols) {
  std::vector<Elem> data;
  data.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    auto row = in.numbers(cols, F.order());
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix<Field>(F, rows, cols, std::move(data));
}

}  // namespace detail

inline void write_instance(std::ostream& os, const RslInstance& inst, bool include_secret = true) {
  const auto& p = inst.params;
  os << "RSL 1\n";
  os << "q=" << p.q << " m=" << p.m << " n=" << p.n << " k=" << p.k << " r=" << p.r << " N=" << p.N << '\n';
  os << "modulus=";
  const auto& f = inst.field.modulus();
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
  os << "\nH:\n";
  detail::write_rows(os, inst.H);
  os << "S:\n";
  detail::write_rows(os, inst.S);
  if (include_secret && inst.secret) {
    os << "[SECRET]\nC:\n";
    detail::write_rows(os, inst.secret->C);
    os << "R:\n";
    for (const auto& R : inst.secret->R) detail::write_rows(os, R);
  }
}

inline RslInstance read_instance(std::istream& is) {
  detail::LineReader in(is);
  in.expect("RSL 1");

  const std::size_t header_line = in.line_no();
  std::map<std::string, std::uint64_t> kv;
  {
    std::istringstream ss(in.next());
    std::string tok;
    while (ss >> tok) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParseError(header_line, "expected key=value, got '" + tok + "'");
      std::uint64_t v = 0;
      const std::string val = tok.substr(eq + 1);
      auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
      if (ec != std::errc() || ptr != val.data() + val.size())
        throw ParseError(header_line, "bad value in '" + tok + "'");
      kv[tok.substr(0, eq)] = v;
    }
  }
  RslParams p;
  for (auto [key, dst] : {std::pair{"q", &p.q}, {"m", &p.m}, {"n", &p.n}, {"k", &p.k}, {"r", &p.r}, {"N", &p.N}}) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(header_line, std::string("missing parameter ") + key);
    if (it->second > 0xFFFFFFFFu) throw ParseError(header_line, std::string("parameter ") + key + " too large");
    *dst = static_cast<std::uint32_t>(it->second);
  }
  if (kv.size() != 6) throw ParseError(header_line, "unexpected extra parameters");
  try {
    p.validate();
  } catch (const ParameterError& e) {
    throw ParseError(header_line, e.what());
  }

  const std::size_t mod_line = in.line_no();
  std::string mod = in.peek();
  if (mod.rfind("modulus=", 0) != 0) throw ParseError(mod_line, "expected 'modulus='");
  std::vector<Elem> modulus;
  {
    // reuse the token reader on the tail of the line
    std::istringstream tail(mod.substr(8));
    detail::LineReader sub(tail);
    if (sub.done()) throw ParseError(mod_line, "empty modulus");
    try {
      modulus = sub.numbers(p.m + 1, p.q);
    } catch (const ParseError& e) {
      throw ParseError(mod_line, std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
    }
    in.next();
  }
  std::optional<ExtensionField> L;
  try {
    L.emplace(PrimeField(p.q), modulus);
  } catch (const std::exception& e) {
    throw ParseError(mod_line, e.what());
  }

  in.expect("H:");
  const std::size_t h_line = in.line_no();
  auto H = detail::read_block(in, *L, p.n - p.k, p.n);
  in.expect("S:");
  auto S = detail::read_block(in, *L, p.n - p.k, p.N);

  std::optional<SecretWitness> secret;
  if (!in.done()) {
    in.expect("[SECRET]");
    in.expect("C:");
    SecretWitness w{detail::read_block(in, L->base(), p.m, p.r), {}};
    in.expect("R:");
    for (std::uint32_t i = 0; i < p.N; ++i) w.R.push_back(detail::read_block(in, L->base(), p.r, p.n));
    if (!in.done()) throw ParseError(in.line_no(), "trailing content after the secret block");
    secret = std::move(w);
  }

  RslInstance inst = [&] {
    try {
      return make_instance(p, *L, std::move(H), std::move(S));
    } catch (const InstanceError& e) {
      throw ParseError(h_line, e.what());
    }
  }();
  if (secret) {
    inst.secret = std::move(secret);
    try {
      validate_instance(inst);
    } catch (const InstanceError& e) {
      throw ParseError(in.line_no(), e.what());
    }
  }
  return inst;
}

inline std::string instance_to_string(const RslInstance& inst, bool include_secret = true) {
  std::ostringstream os;
  write_instance(os, inst, include_secret);
  return os.str();
}

inline RslInstance instance_from_string(const std::string& text) {
  std::istringstream is(text);
  return read_instance(is);
}

inline void save_instance(const std::string& path, const RslInstance& inst, bool include_secret = true) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_instance(os, inst, include_secret);
}

inline RslInstance load_instance(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_instance(is);
}

}  // namespace rslm

#endif  // RSLM_CORE_IO_HPP_
