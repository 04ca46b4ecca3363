/* Copyright 2026 The tlbraid Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

// Matrix-group closure enumeration, classical group orders and
// containment certificates.

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tlbraid/field.hpp"
#include "tlbraid/linalg.hpp"
#include "tlbraid/rep.hpp"

namespace tlbraid {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 28;

// Fixed-width encoding of (block-diagonal) matrices: ceil(log2 q) bits per
// stored entry, entry k at bit offset k * bits. Layouts whose total width
// exceeds 64 bits use byte strings instead.
class Packer {
 public:
  Packer() = default;
  Packer(const Field& field, std::vector<std::size_t> blocks);

  const Field& field() const { return field_; }
  const std::vector<std::size_t>& blocks() const { return blocks_; }
  std::size_t degree() const { return degree_; }
  std::size_t entries() const { return entries_; }
  unsigned bits() const { return bits_; }
  std::size_t width() const { return entries_ * bits_; }
  bool fits64() const { return width() <= 64; }

  template <class E>
  std::uint64_t pack_raw(const E* e) const {
    std::uint64_t code = 0;
    for (std::size_t k = entries_; k-- > 0;) code = (code << bits_) | static_cast<std::uint64_t>(e[k]);
    return code;
  }
  template <class E>
  void unpack_raw(std::uint64_t code, E* e) const {
    const std::uint64_t mask = bits_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits_) - 1;
    for (std::size_t k = 0; k < entries_; ++k) {
      e[k] = static_cast<E>(code & mask);
      code = bits_ == 64 ? 0 : code >> bits_;
    }
  }
  template <class E>
  std::string pack_bytes_raw(const E* e) const {
    std::string s(entries_ * bytes_per_entry_, '\0');
    for (std::size_t k = 0; k < entries_; ++k) {
      std::uint64_t v = static_cast<std::uint64_t>(e[k]);
      for (unsigned b = 0; b < bytes_per_entry_; ++b) {
        s[k * bytes_per_entry_ + b] = static_cast<char>(v & 0xff);
        v >>= 8;
      }
    }
    return s;
  }
  template <class E>
  void unpack_bytes_raw(const std::string& s, E* e) const {
    for (std::size_t k = 0; k < entries_; ++k) {
      std::uint64_t v = 0;
      for (unsigned b = bytes_per_entry_; b-- > 0;) {
        v = (v << 8) | static_cast<unsigned char>(s[k * bytes_per_entry_ + b]);
      }
      e[k] = static_cast<E>(v);
    }
  }

  // Stored entries of a matrix with this block layout; throws
  // kShapeMismatch if entries outside the blocks are nonzero.
  std::vector<std::uint64_t> flatten(const Matrix& m) const;
  Matrix expand(std::span<const std::uint64_t> entries) const;

  std::uint64_t pack(const Matrix& m) const;
  Matrix unpack(std::uint64_t code) const;
  std::string pack_bytes(const Matrix& m) const;
  Matrix unpack_bytes(const std::string& code) const;

 private:
  Field field_;
  std::vector<std::size_t> blocks_;
  std::size_t degree_ = 0;
  std::size_t entries_ = 0;
  unsigned bits_ = 0;
  unsigned bytes_per_entry_ = 0;
};

namespace detail {

// Set of element codes: a flat bitset for widths up to 27 bits, open
// addressing over 64-bit codes up to 64 bits, byte strings beyond.
class CodeSet {
 public:
  explicit CodeSet(std::size_t width_bits);
  bool insert(std::uint64_t code);
  bool contains(std::uint64_t code) const;
  bool insert(const std::string& code);
  bool contains(const std::string& code) const;
  std::size_t memory_bytes() const;

 private:
  void grow();
  enum class Mode { kBits, kHash, kBytes } mode_;
  std::vector<std::uint64_t> words_;  // bitset words or hash slots
  std::size_t used_ = 0;
  std::unordered_set<std::string> bytes_;
};

inline constexpr std::size_t kBitsetWidthLimit = 27;

}  // namespace detail

struct ClosureOptions {
  std::uint64_t cap = kDefaultCap;
  bool projective = false;
  // Block sizes of a block-diagonal layout; empty means one block.
  std::vector<std::size_t> blocks;
};

struct GroupClosure {
  Field field;
  std::size_t degree = 0;
  std::vector<Matrix> gens;
  bool projective = false;
  Packer packer;
  // Elements in discovery order; codes for packed layouts, byte strings
  // otherwise.
  std::vector<std::uint64_t> codes;
  std::vector<std::string> byte_codes;
  std::uint64_t order = 0;
  bool capped = false;
  std::shared_ptr<detail::CodeSet> members;

  Matrix element(std::size_t k) const;
  // Membership of a matrix (canonicalized first for projective closures).
  bool contains(const Matrix& m) const;
};

// Scales so the first nonzero entry in row-major order is 1.
Matrix projective_canonical(const Matrix& m);

// Breadth-first enumeration from I under right multiplication by the
// generators and their inverses. Stops with capped = true once the element
// count would exceed cap.
GroupClosure closure(std::span<const Matrix> gens, const ClosureOptions& options = {});
GroupClosure projective_closure(std::span<const Matrix> gens, std::uint64_t cap = kDefaultCap);

enum class ClassicalKind { kGL, kSL, kGU, kSU, kPGL, kPSL, kPGU, kPSU };

const char* to_string(ClassicalKind kind);

// For the unitary kinds q is the order of the fixed field: GU_N(q) lives in
// GL_N(q^2).
BigInt classical_order(ClassicalKind kind, unsigned n, std::uint64_t q);

enum class Verdict { kContainsSL, kContainsSU, kInconclusive, kCapped, kRefuted };

const char* to_string(Verdict v);

enum class Route { kAuto, kDirect, kProjective };

struct Certificate {
  Verdict verdict = Verdict::kInconclusive;
  std::string route;   // "direct" or "projective"
  BigInt target = 0;   // order being matched
  BigInt observed = 0; // det-1 count or projective order
  std::string detail;
};

// Direct closures: count det-1 elements against |SL_N(q)|. Projective
// closures: compare the order against |PGL_N(q)| when gcd(N, q-1) = 1.
Certificate certify_contains_sl(const GroupClosure& g);

// Closure of unitarized generators over F_{q0^2}: every element must be an
// isometry of the identity form, and the det-1 count must be |SU_N(q0)|.
Certificate certify_contains_su(const GroupClosure& g, const ExtPair& pair);

// Order of the subgroup of F_q^x generated by the generator determinants.
std::uint64_t det_image(std::span<const Matrix> gens);

// Number of transvections among the elements of an uncapped direct closure.
std::uint64_t transvection_census(const GroupClosure& g);

struct CensusBounds {
  unsigned n = 0;
  std::uint64_t q = 0;
  unsigned k = 0;  // floor(N/2)
  BigInt t_linear, t_unitary;
  BigInt tprime_linear, tprime_unitary;
  BigInt f_value;   // (1+..+q^{k-1})(1+..+q^{k-2}) - k(2k-1)
  BigInt h_value;   // h_k(q)
  BigInt h_margin;  // h_k(q) - k(2k-1)
};

CensusBounds census_bounds(unsigned n, std::uint64_t q);

// The N x N matrix with zeros at (i,i), (j,j), a at (i,j), 1/a at (j,i) and
// ones elsewhere on the diagonal; i, j zero-based.
Matrix swap_matrix(const Field& field, std::size_t n, Elem a, std::size_t i, std::size_t j);

// Transvections among all monomial matrices of degree N over the field.
std::uint64_t monomial_transvection_count(const Field& field, unsigned n);

// Normal closure in g of the generator commutators, i.e. [G, G].
GroupClosure derived_subgroup(const GroupClosure& g);

struct DicksonResult {
  std::uint64_t order = 0;
  std::uint64_t derived_order = 0;
  bool metabelian = false;
  std::vector<std::string> candidates;  // "AbelianByAbelian", "A4", "S4", "A5", "PSL(q)", "PGL(q)"
};

// Classification of an uncapped projective closure of degree 2.
DicksonResult dickson_classify(const GroupClosure& g);

struct PairCertificate {
  std::size_t i = 0, j = 0;
  Verdict verdict = Verdict::kInconclusive;
  std::uint64_t joint_order = 0;
  std::uint64_t det_one_count = 0;
  BigInt target = 0;  // |S_i| * |S_j|
  std::uint64_t det_linkage = 0;  // lcm of the two determinant orders
  bool consistent = false;  // joint order = target * det_linkage
  bool capped = false;
};

struct ProductCertificate {
  std::vector<Certificate> factors;
  std::vector<PairCertificate> pairs;
};

// Per-factor certificates and, for each pair, the joint closure of the
// block-diagonal generators. A pair is certified when its det-(1,1) count is
// |S_i| |S_j| with S the special linear or special unitary group of the
// factor.
ProductCertificate product_certify(std::span<const RepBundle> bundles, std::uint64_t cap,
                                   Route route = Route::kAuto);

// Certification of a single bundle: unitarizes in the Unitary case, picks
// the projective route for linear bundles when gcd(N, q-1) = 1 under kAuto.
struct BundleCertification {
  Certificate certificate;
  std::uint64_t order = 0;
  bool capped = false;
  bool projective = false;
  std::uint64_t det_image_order = 0;
};

BundleCertification certify_bundle(const RepBundle& bundle, std::uint64_t cap, Route route);

}  // namespace tlbraid
