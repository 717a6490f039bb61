// Static-model arithmetic coder with 31-bit integer bounds and deferred
// (pending) bits for carries across the midpoint.

#include <string>

#include "polycomp/entropy.hpp"
#include "polycomp/error.hpp"

namespace polycomp {
namespace {

constexpr unsigned kCodeBits = 31;
constexpr std::uint64_t kTop = (std::uint64_t{1} << kCodeBits) - 1;
constexpr std::uint64_t kHalf = std::uint64_t{1} << (kCodeBits - 1);
constexpr std::uint64_t kQuarter = kHalf >> 1;
constexpr std::uint64_t kThreeQuarters = kHalf + kQuarter;

void check_model(const SymbolModel& model) {
  if (model.size() == 0) throw Error(Errc::InvalidArgument, "arithmetic coder needs a non-empty model");
  if (model.total() > kQuarter) {
    throw Error(Errc::InvalidArgument, "model total exceeds the 29-bit coder limit");
  }
}

class BitSink {
 public:
  explicit BitSink(BitString& out) : out_(out) {}
  void emit(bool bit) {
    out_.push(bit);
    for (; pending_ > 0; --pending_) out_.push(!bit);
  }
  void defer() { ++pending_; }

 private:
  BitString& out_;
  std::uint64_t pending_ = 0;
};

}  // namespace

BitString ae_encode_bits(std::string_view digits, const SymbolModel& model) {
  check_model(model);
  BitString out;
  BitSink sink(out);
  std::uint64_t low = 0, high = kTop;
  const std::uint64_t total = model.total();
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    auto idx = (c >= '0' && c <= '9') ? model.index_of(c - '0') : std::nullopt;
    if (!idx) {
      throw Error(Errc::SymbolNotInModel, std::string("character '") + c + "' at position " + std::to_string(i) +
                                              " is not in the model",
                  i);
    }
    const std::uint64_t range = high - low + 1;
    high = low + range * model.cumulative(*idx + 1) / total - 1;
    low = low + range * model.cumulative(*idx) / total;
    while (true) {
      if (high < kHalf) {
        sink.emit(false);
      } else if (low >= kHalf) {
        sink.emit(true);
        low -= kHalf;
        high -= kHalf;
      } else if (low >= kQuarter && high < kThreeQuarters) {
        sink.defer();
        low -= kQuarter;
        high -= kQuarter;
      } else {
        break;
      }
      low <<= 1;
      high = (high << 1) | 1;
    }
  }
  // Two more bits select a point inside [low, high]; trailing zeros are
  // implied by the decoder's zero padding and are dropped.
  sink.defer();
  sink.emit(low >= kQuarter);
  while (!out.bits.empty() && out.bits.back() == 0) out.bits.pop_back();
  return out;
}

std::string ae_decode_bits(const BitString& bits, const SymbolModel& model, std::size_t count) {
  check_model(model);
  BitReader in(bits);
  std::uint64_t low = 0, high = kTop;
  std::uint64_t value = in.read_bits(kCodeBits);
  const std::uint64_t total = model.total();
  std::string out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::uint64_t range = high - low + 1;
    const std::uint64_t target = ((value - low + 1) * total - 1) / range;
    // Largest index whose cumulative count is <= target.
    std::size_t lo = 0, hi = model.size();
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      if (model.cumulative(mid) <= target) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const std::size_t idx = lo;
    out.push_back(static_cast<char>('0' + model.symbols()[idx]));
    high = low + range * model.cumulative(idx + 1) / total - 1;
    low = low + range * model.cumulative(idx) / total;
    while (true) {
      if (high < kHalf) {
        // nothing to subtract
      } else if (low >= kHalf) {
        low -= kHalf;
        high -= kHalf;
        value -= kHalf;
      } else if (low >= kQuarter && high < kThreeQuarters) {
        low -= kQuarter;
        high -= kQuarter;
        value -= kQuarter;
      } else {
        break;
      }
      low <<= 1;
      high = (high << 1) | 1;
      value = (value << 1) | (in.read() ? 1u : 0u);
    }
  }
  return out;
}

std::size_t fixed_digit_count(std::size_t n_points, Transform t) {
  return t == Transform::DeltaMin ? 6 * n_points + 3 : 6 * n_points - 3;
}

Encoded ae_encode(std::string_view digits, const SymbolModel& model, std::size_t n_points, Transform transform,
                  const Alphabet& a) {
  if (n_points >= a.base()) {
    throw Error(Errc::ValueOutOfRange, "point count " + std::to_string(n_points) + " does not fit one character");
  }
  if (digits.size() != fixed_digit_count(n_points, transform)) {
    throw Error(Errc::InvalidArgument, "digit count does not match the fixed-field length of " +
                                           std::to_string(n_points) + " points");
  }
  std::string payload(1, a.char_at(n_points));
  payload += pack_bits(ae_encode_bits(digits, model), a);
  return {CodecId::Ae, transform, std::move(payload)};
}

std::string ae_decode(const Encoded& enc, const SymbolModel& model, const Alphabet& a) {
  if (enc.payload.empty()) throw Error(Errc::MalformedPayload, "empty arithmetic-coded payload");
  auto n = a.index_of(enc.payload[0]);
  if (!n) throw Error(Errc::UnknownCharacter, "point-count character is not a digit", 0);
  if (*n < 4) throw Error(Errc::MalformedPayload, "point count below 4", 0);
  BitString bits;
  try {
    bits = unpack_bits(std::string_view(enc.payload).substr(1), a);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), e.position() ? std::optional<std::size_t>(*e.position() + 1) : std::nullopt);
  }
  return ae_decode_bits(bits, model, fixed_digit_count(*n, enc.transform));
}

Encoded encode_ae(const DeltaSeq& ds, const SymbolModel& model, const Alphabet& a) {
  const Encoded fixed = encode_fixed(ds);
  return ae_encode(fixed.payload, model, ds.point_count(), ds.kind, a);
}

DeltaSeq decode_ae(const Encoded& enc, const SymbolModel& model, const Alphabet& a, const SeqContext& ctx) {
  return decode_fixed({CodecId::Fixed, enc.transform, ae_decode(enc, model, a)}, ctx);
}

}  // namespace polycomp
