#include "skelfact/polytope.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <stdexcept>

namespace skelfact {

namespace {

// Canonical character rank for cube words: digits before the free mark,
// so a word sorts like a base-3 numeral with * = 2.
int cube_char_rank(char c) {
  switch (c) {
    case '0': return 0;
    case '1': return 1;
    case '*': return 2;
    default: return 3;
  }
}

bool cube_word_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    int ra = cube_char_rank(a[i]), rb = cube_char_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

// Emits all k-subsets of {lo, ..., hi} in lexicographic order.
void for_each_subset(int lo, int hi, int k,
                     std::vector<int>& prefix,
                     const std::function<void(const std::vector<int>&)>& fn) {
  if (k == 0) {
    fn(prefix);
    return;
  }
  for (int x = lo; x <= hi - k + 1; ++x) {
    prefix.push_back(x);
    for_each_subset(x + 1, hi, k - 1, prefix, fn);
    prefix.pop_back();
  }
}

void enumerate_cross_rec(int next_axis, int n, int remaining,
                         std::vector<SignedVert>& prefix,
                         std::vector<Face>& out) {
  if (remaining == 0) {
    out.push_back(Face::cross(prefix));
    return;
  }
  for (int a = next_axis; a <= n - remaining + 1; ++a) {
    for (bool neg : {false, true}) {
      prefix.push_back({a, neg});
      enumerate_cross_rec(a + 1, n, remaining - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

void enumerate_cube_rec(int pos, int n, int stars_left,
                        std::string& word, std::vector<Face>& out) {
  if (pos == n) {
    out.push_back(Face::cube(word));
    return;
  }
  int free_slots = n - pos;
  // character order '0' < '1' < '*' keeps emission canonical
  if (stars_left < free_slots) {
    word[pos] = '0';
    enumerate_cube_rec(pos + 1, n, stars_left, word, out);
    word[pos] = '1';
    enumerate_cube_rec(pos + 1, n, stars_left, word, out);
  }
  if (stars_left > 0) {
    word[pos] = '*';
    enumerate_cube_rec(pos + 1, n, stars_left - 1, word, out);
  }
}

int parse_nonneg_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
    throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  return value;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    if (comma == std::string_view::npos) {
      parts.push_back(s.substr(start));
      break;
    }
    parts.push_back(s.substr(start, comma - start));
    start = comma + 1;
  }
  return parts;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Simplex: return "simplex";
    case Family::CrossPolytope: return "cross";
    case Family::Cube: return "cube";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view s) {
  if (s == "simplex") return Family::Simplex;
  if (s == "cross") return Family::CrossPolytope;
  if (s == "cube") return Family::Cube;
  return std::nullopt;
}

bool operator==(const SkeletonSpec& a, const SkeletonSpec& b) {
  return a.family == b.family && a.n == b.n && a.ell == b.ell;
}

void validate_spec(const SkeletonSpec& spec) {
  if (spec.n < 1)
    throw std::invalid_argument("dimension n must be >= 1, got " +
                                std::to_string(spec.n));
  if (spec.ell < 0 || spec.ell >= spec.n)
    throw std::invalid_argument("skeleton level must satisfy 0 <= l < n, got l=" +
                                std::to_string(spec.ell) + " n=" +
                                std::to_string(spec.n));
}

bool operator==(const SignedVert& a, const SignedVert& b) {
  return a.axis == b.axis && a.neg == b.neg;
}

bool operator<(const SignedVert& a, const SignedVert& b) {
  if (a.axis != b.axis) return a.axis < b.axis;
  return a.neg < b.neg;  // + before -
}

Face Face::simplex(std::vector<int> v) {
  Face f;
  f.family = Family::Simplex;
  f.verts = std::move(v);
  return f;
}

Face Face::cross(std::vector<SignedVert> sv) {
  Face f;
  f.family = Family::CrossPolytope;
  f.signed_verts = std::move(sv);
  return f;
}

Face Face::cube(std::string w) {
  Face f;
  f.family = Family::Cube;
  f.word = std::move(w);
  return f;
}

int Face::level() const {
  switch (family) {
    case Family::Simplex:
      return static_cast<int>(verts.size()) - 1;
    case Family::CrossPolytope:
      return static_cast<int>(signed_verts.size()) - 1;
    case Family::Cube:
      return static_cast<int>(std::count(word.begin(), word.end(), '*'));
  }
  return -1;
}

bool operator==(const Face& a, const Face& b) {
  return a.family == b.family && a.verts == b.verts &&
         a.signed_verts == b.signed_verts && a.word == b.word;
}

bool operator!=(const Face& a, const Face& b) { return !(a == b); }

bool face_less(const Face& a, const Face& b) {
  if (a.family != b.family) return a.family < b.family;
  switch (a.family) {
    case Family::Simplex:
      return a.verts < b.verts;
    case Family::CrossPolytope:
      return a.signed_verts < b.signed_verts;
    case Family::Cube:
      return cube_word_less(a.word, b.word);
  }
  return false;
}

std::string encode_face(const Face& f) {
  std::string out;
  switch (f.family) {
    case Family::Simplex:
      for (size_t i = 0; i < f.verts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(f.verts[i]);
      }
      return out;
    case Family::CrossPolytope:
      for (size_t i = 0; i < f.signed_verts.size(); ++i) {
        if (i) out += ',';
        out += f.signed_verts[i].neg ? '-' : '+';
        out += std::to_string(f.signed_verts[i].axis);
      }
      return out;
    case Family::Cube:
      return f.word;
  }
  return out;
}

Face parse_face(Family family, std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty face encoding");
  switch (family) {
    case Family::Simplex: {
      std::vector<int> verts;
      for (auto part : split_commas(text)) verts.push_back(parse_nonneg_int(part));
      for (size_t i = 1; i < verts.size(); ++i)
        if (verts[i - 1] >= verts[i])
          throw std::invalid_argument("vertices not strictly ascending in '" +
                                      std::string(text) + "'");
      return Face::simplex(std::move(verts));
    }
    case Family::CrossPolytope: {
      std::vector<SignedVert> sv;
      for (auto part : split_commas(text)) {
        if (part.size() < 2 || (part[0] != '+' && part[0] != '-'))
          throw std::invalid_argument("signed vertex needs a +/- prefix in '" +
                                      std::string(text) + "'");
        int axis = parse_nonneg_int(part.substr(1));
        if (axis < 1)
          throw std::invalid_argument("axis must be >= 1 in '" +
                                      std::string(text) + "'");
        sv.push_back({axis, part[0] == '-'});
      }
      for (size_t i = 1; i < sv.size(); ++i)
        if (sv[i - 1].axis >= sv[i].axis)
          throw std::invalid_argument("axes not strictly ascending in '" +
                                      std::string(text) + "'");
      return Face::cross(std::move(sv));
    }
    case Family::Cube: {
      for (char c : text)
        if (c != '0' && c != '1' && c != '*')
          throw std::invalid_argument("cube word may contain only 0, 1, * : '" +
                                      std::string(text) + "'");
      return Face::cube(std::string(text));
    }
  }
  throw std::invalid_argument("unknown family");
}

bool face_valid(const SkeletonSpec& spec, const Face& f, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (f.family != spec.family) return fail("family mismatch");
  switch (spec.family) {
    case Family::Simplex: {
      if (static_cast<int>(f.verts.size()) != spec.ell + 1)
        return fail("expected " + std::to_string(spec.ell + 1) + " vertices, got " +
                    std::to_string(f.verts.size()));
      for (size_t i = 0; i < f.verts.size(); ++i) {
        if (f.verts[i] < 0 || f.verts[i] > spec.n)
          return fail("vertex " + std::to_string(f.verts[i]) + " out of [0," +
                      std::to_string(spec.n) + "]");
        if (i > 0 && f.verts[i - 1] >= f.verts[i])
          return fail("vertices not strictly ascending");
      }
      return true;
    }
    case Family::CrossPolytope: {
      if (static_cast<int>(f.signed_verts.size()) != spec.ell + 1)
        return fail("expected " + std::to_string(spec.ell + 1) +
                    " signed vertices, got " + std::to_string(f.signed_verts.size()));
      for (size_t i = 0; i < f.signed_verts.size(); ++i) {
        int axis = f.signed_verts[i].axis;
        if (axis < 1 || axis > spec.n)
          return fail("axis " + std::to_string(axis) + " out of [1," +
                      std::to_string(spec.n) + "]");
        if (i > 0 && f.signed_verts[i - 1].axis >= axis)
          return fail("axes not strictly ascending (antipodal pair or disorder)");
      }
      return true;
    }
    case Family::Cube: {
      if (static_cast<int>(f.word.size()) != spec.n)
        return fail("word length " + std::to_string(f.word.size()) + " != n=" +
                    std::to_string(spec.n));
      int stars = 0;
      for (char c : f.word) {
        if (c == '*') ++stars;
        else if (c != '0' && c != '1') return fail("bad character in word");
      }
      if (stars != spec.ell)
        return fail("star count " + std::to_string(stars) + " != l=" +
                    std::to_string(spec.ell));
      return true;
    }
  }
  return fail("unknown family");
}

BigInt face_count(const SkeletonSpec& spec) {
  validate_spec(spec);
  auto binom = [](int n, int k) {
    BigInt r = 1;
    if (k < 0 || k > n) return BigInt(0);
    for (int i = 1; i <= k; ++i) {
      r *= n - k + i;
      r /= i;
    }
    return r;
  };
  switch (spec.family) {
    case Family::Simplex:
      return binom(spec.n + 1, spec.ell + 1);
    case Family::CrossPolytope:
      return binom(spec.n, spec.ell + 1) << (spec.ell + 1);
    case Family::Cube:
      return binom(spec.n, spec.ell) << (spec.n - spec.ell);
  }
  return 0;
}

std::vector<Face> enumerate_faces(const SkeletonSpec& spec) {
  validate_spec(spec);
  std::vector<Face> out;
  switch (spec.family) {
    case Family::Simplex: {
      std::vector<int> prefix;
      for_each_subset(0, spec.n, spec.ell + 1, prefix,
                      [&](const std::vector<int>& s) { out.push_back(Face::simplex(s)); });
      break;
    }
    case Family::CrossPolytope: {
      std::vector<SignedVert> prefix;
      enumerate_cross_rec(1, spec.n, spec.ell + 1, prefix, out);
      break;
    }
    case Family::Cube: {
      std::string word(spec.n, '0');
      enumerate_cube_rec(0, spec.n, spec.ell, word, out);
      break;
    }
  }
  return out;
}

std::vector<Face> boundary_faces(const Face& f) {
  std::vector<Face> out;
  if (f.level() <= 0) return out;
  switch (f.family) {
    case Family::Simplex:
      for (size_t drop = 0; drop < f.verts.size(); ++drop) {
        std::vector<int> sub;
        for (size_t i = 0; i < f.verts.size(); ++i)
          if (i != drop) sub.push_back(f.verts[i]);
        out.push_back(Face::simplex(std::move(sub)));
      }
      break;
    case Family::CrossPolytope:
      for (size_t drop = 0; drop < f.signed_verts.size(); ++drop) {
        std::vector<SignedVert> sub;
        for (size_t i = 0; i < f.signed_verts.size(); ++i)
          if (i != drop) sub.push_back(f.signed_verts[i]);
        out.push_back(Face::cross(std::move(sub)));
      }
      break;
    case Family::Cube:
      for (size_t p = 0; p < f.word.size(); ++p) {
        if (f.word[p] != '*') continue;
        for (char fix : {'0', '1'}) {
          std::string w = f.word;
          w[p] = fix;
          out.push_back(Face::cube(std::move(w)));
        }
      }
      break;
  }
  std::sort(out.begin(), out.end(), face_less);
  return out;
}

EvennessReport is_even_skeleton(const SkeletonSpec& spec) {
  validate_spec(spec);
  if (spec.ell < 1)
    throw std::invalid_argument("evenness is defined for l >= 1");
  EvennessReport rep;
  long long mult;
  if (spec.family == Family::CrossPolytope) {
    // each free axis contributes the two extensions +e_a / -e_a
    mult = 2LL * (spec.n - spec.ell);
  } else {
    mult = spec.n - spec.ell + 1;
  }
  rep.multiplicity = mult;
  rep.positive = mult > 0;
  rep.is_even = rep.positive && mult % 2 == 0;
  return rep;
}

std::vector<Face> canonical_sphere_faces(Family family, int ell) {
  if (ell < 0) throw std::invalid_argument("level must be >= 0");
  // The ell-faces of X_{ell+1} are exactly its boundary's ell-faces.
  return enumerate_faces({family, ell + 1, ell});
}

}  // namespace skelfact
