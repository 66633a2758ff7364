#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "szkit/bitstring.hpp"
#include "szkit/circuit.hpp"
#include "szkit/kernels.hpp"
#include "szkit/rng.hpp"
#include "szkit/szcodec.hpp"

namespace szkit {

struct HittingSet {
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::vector<Point> points;

  std::size_t r() const { return points.size(); }
  std::size_t distinct_count() const;
  friend bool operator==(const HittingSet&, const HittingSet&) = default;
};

// Throws unless every point has n coordinates in S_q.
void check_hitting_set(const HittingSet& h);
std::string format_hitting_set(const HittingSet& h);
// Reads the optional "# hitting-set n=.. q=.. r=.." header; without it n is
// taken from the first point and q defaults to one more than the largest
// coordinate.
HittingSet parse_hitting_set(std::string_view text, std::optional<std::uint64_t> q = std::nullopt);
HittingSet sample_hitting_set(std::size_t n, std::uint64_t q, std::size_t r, Rng& rng);

struct SliceParams {
  std::size_t n = 1;
  std::size_t d = 1;
  std::size_t s = 1;
  std::size_t m = 0;
};

// Membership in Ckt(n,d,s): at most n variables, all parameters plugged,
// every individual degree at most d and representation size at most s.
bool in_ckt(const Circuit& c, std::size_t n, std::size_t d, std::size_t s);

using Decoder = std::function<Circuit(const SliceParams&, const Bits& x, const std::string& blob)>;
using MemberSampler = std::function<Bits(Rng&)>;

class DefinableClass {
 public:
  DefinableClass(std::string name, SliceParams slice, Decoder decoder, std::string blob = {},
                 MemberSampler sampler = {});

  const std::string& name() const { return name_; }
  const SliceParams& slice() const { return slice_; }
  const std::string& blob() const { return blob_; }

  // The decoded circuit when it lies in Ckt(n,d,s); the zero circuit otherwise.
  Circuit member(const Bits& x) const;
  Circuit member(std::uint64_t x) const { return member(bits_from_uint(x, slice_.m)); }
  Bits sample_description(Rng& rng) const;

 private:
  std::string name_;
  SliceParams slice_;
  Decoder decoder_;
  std::string blob_;
  MemberSampler sampler_;
};

struct WitnessSearch {
  std::optional<Point> witness;
  std::uint64_t trials = 0;
  bool exhaustive = false;
};

struct WitnessOptions {
  std::uint64_t budget = 64;
  std::uint64_t seed = 0;
  std::uint64_t exhaustion_cap = std::uint64_t{1} << 22;
  Backend backend = Backend::Parallel;
};

// Hint first, then seeded uniform samples, then an exhaustive scan of S_q^n
// when it fits under the cap.
WitnessSearch try_find_small_witness(const Circuit& c, std::size_t n, std::size_t d, std::uint64_t q,
                                     const std::optional<Point>& hint, WitnessOptions opts = {});
// As above; throws BudgetExhausted when nothing is found.
Point find_small_witness(const Circuit& c, std::size_t n, std::size_t d, std::uint64_t q,
                         const std::optional<Point>& hint, WitnessOptions opts = {});

std::vector<Point> g_map(const DefinableClass& cls, const Bits& x, const Point& a, const std::vector<RootCode>& codes,
                         std::uint64_t q);

struct VerifyOptions {
  std::uint64_t class_cap = std::uint64_t{1} << 16;
  std::uint64_t exhaustion_cap = std::uint64_t{1} << 22;
  std::uint64_t witness_budget = 64;
  std::uint64_t spot_checks = 256;
  std::uint64_t seed = 0;
  Backend backend = Backend::Parallel;
};

struct HitVerdict {
  bool hits = true;
  std::optional<Bits> x;
  std::optional<Point> nonroot;
  // Members were sampled rather than enumerated.
  bool spot_checked = false;
  std::uint64_t members_checked = 0;
  std::uint64_t nonvanishing = 0;
  // Members whose non-vanishing could not be settled; treated as vanishing.
  std::uint64_t undecided = 0;
};

HitVerdict verify_hitting_set(const DefinableClass& cls, const HittingSet& h, VerifyOptions opts = {});

// Precomputed members and witnesses of an enumerable class; verification of
// many candidate sets reuses them.
class SliceTable {
 public:
  SliceTable(const DefinableClass& cls, std::uint64_t q, VerifyOptions opts = {});
  HitVerdict verify(const HittingSet& h) const;
  std::size_t size() const { return members_.size(); }
  std::uint64_t witness_q() const { return witness_q_; }

 private:
  struct Member {
    Bits x;
    std::optional<Evaluator> eval;
    std::optional<Point> witness;  // none when the member vanishes
    bool settled = false;
  };
  SliceParams slice_;
  VerifyOptions opts_;
  std::uint64_t witness_q_ = 0;
  bool spot_checked_ = false;
  std::uint64_t undecided_ = 0;
  std::vector<Member> members_;
};

// 2^m n^r d^r q^((n-1)r+n) <= q^(nr) / 2.
bool largeness_holds(std::size_t m, std::size_t n, std::size_t d, std::uint64_t q, std::size_t r);
// Throws InputError unless q >= 2dn and r > m + n|q|.
void check_search_preconditions(const SliceParams& slice, std::uint64_t q, std::size_t r);

struct SearchResult {
  HittingSet set;
  std::uint64_t attempts = 0;
  HitVerdict verdict;
};

SearchResult search_hitting_set(const DefinableClass& cls, std::uint64_t q, std::size_t r, std::uint64_t seed,
                                std::uint64_t budget, VerifyOptions opts = {});

// True iff h is outside the image of g_map, decided exhaustively over
// {0,1}^m x S_q^n x C_{n,d,q}^r.
bool nonrange_is_hitting(const DefinableClass& cls, const HittingSet& h,
                         std::uint64_t cap = std::uint64_t{1} << 22);

}  // namespace szkit
