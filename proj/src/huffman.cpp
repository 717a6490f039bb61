#include <algorithm>
#include <queue>
#include <string>
#include <tuple>

#include "polycomp/entropy.hpp"
#include "polycomp/error.hpp"

namespace polycomp {
namespace {

constexpr unsigned kMaxCodeLength = 60;

}  // namespace

HuffmanCode::HuffmanCode(const SymbolModel& model) : symbols_(model.symbols()) {
  const std::size_t n = symbols_.size();
  if (n < 2) throw Error(Errc::InvalidArgument, "Huffman code needs at least two symbols");

  // Min-heap on (weight, node id); ids make merging order deterministic.
  using Item = std::tuple<std::uint64_t, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::vector<std::size_t> parent(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) heap.emplace(model.counts()[i], i);
  std::size_t next = n;
  while (heap.size() > 1) {
    auto [wa, a] = heap.top();
    heap.pop();
    auto [wb, b] = heap.top();
    heap.pop();
    parent[a] = next;
    parent[b] = next;
    heap.emplace(wa + wb, next++);
  }
  const std::size_t root = next - 1;

  // Parents always have larger ids, so depths resolve in one reverse pass.
  std::vector<unsigned> depth(2 * n - 1, 0);
  for (std::size_t id = root; id-- > 0;) depth[id] = depth[parent[id]] + 1;
  lengths_.assign(depth.begin(), depth.begin() + static_cast<std::ptrdiff_t>(n));
  const unsigned max_len = *std::max_element(lengths_.begin(), lengths_.end());
  if (max_len > kMaxCodeLength) throw Error(Errc::InvalidArgument, "Huffman code length exceeds 60 bits");

  canonical_order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) canonical_order_[i] = i;
  std::sort(canonical_order_.begin(), canonical_order_.end(), [&](std::size_t l, std::size_t r) {
    return std::tie(lengths_[l], symbols_[l]) < std::tie(lengths_[r], symbols_[r]);
  });

  codes_.assign(n, 0);
  first_code_.assign(max_len + 1, 0);
  first_index_.assign(max_len + 1, 0);
  count_per_length_.assign(max_len + 1, 0);
  std::uint64_t code = 0;
  unsigned prev_len = lengths_[canonical_order_[0]];
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = canonical_order_[k];
    code <<= (lengths_[i] - prev_len);
    prev_len = lengths_[i];
    if (count_per_length_[prev_len]++ == 0) {
      first_code_[prev_len] = code;
      first_index_[prev_len] = k;
    }
    codes_[i] = code++;
  }

  if (auto esc = model.index_of(SymbolModel::kEscape); esc && model.kind() == SymbolKind::Value) {
    escape_index_ = *esc;
  }
}

unsigned HuffmanCode::length_of(std::int64_t symbol) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end() || *it != symbol) {
    throw Error(Errc::SymbolNotInModel, "symbol " + std::to_string(symbol) + " has no Huffman code");
  }
  return lengths_[static_cast<std::size_t>(it - symbols_.begin())];
}

std::string HuffmanCode::code_of(std::int64_t symbol) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end() || *it != symbol) {
    throw Error(Errc::SymbolNotInModel, "symbol " + std::to_string(symbol) + " has no Huffman code");
  }
  const auto i = static_cast<std::size_t>(it - symbols_.begin());
  BitString b;
  b.push_bits(codes_[i], lengths_[i]);
  return b.to_string();
}

double HuffmanCode::average_length(const SymbolModel& model) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    sum += static_cast<double>(model.counts()[i]) * length_of(model.symbols()[i]);
  }
  return sum / static_cast<double>(model.total());
}

void HuffmanCode::encode(std::span<const std::int64_t> values, BitString& out) const {
  for (auto v : values) {
    auto it = std::lower_bound(symbols_.begin(), symbols_.end(), v);
    if (v != SymbolModel::kEscape && it != symbols_.end() && *it == v) {
      const auto i = static_cast<std::size_t>(it - symbols_.begin());
      out.push_bits(codes_[i], lengths_[i]);
      continue;
    }
    if (!escape_index_) {
      throw Error(Errc::SymbolNotInModel, "value " + std::to_string(v) + " is not in the Huffman model");
    }
    if (v < 0 || v >= (std::int64_t{1} << kRawEscapeBits)) {
      throw Error(Errc::ValueOutOfRange, "escaped value " + std::to_string(v) + " exceeds 17 bits");
    }
    out.push_bits(codes_[*escape_index_], lengths_[*escape_index_]);
    out.push_bits(static_cast<std::uint64_t>(v), kRawEscapeBits);
  }
}

std::vector<std::int64_t> HuffmanCode::decode(BitReader& in, std::size_t count) const {
  std::vector<std::int64_t> out;
  out.reserve(count);
  const unsigned max_len = static_cast<unsigned>(first_code_.size() - 1);
  for (std::size_t k = 0; k < count; ++k) {
    std::uint64_t code = 0;
    std::optional<std::size_t> index;
    for (unsigned len = 1; len <= max_len; ++len) {
      code = (code << 1) | (in.read() ? 1u : 0u);
      const auto c = count_per_length_[len];
      if (c != 0 && code >= first_code_[len] && code - first_code_[len] < c) {
        index = canonical_order_[first_index_[len] + (code - first_code_[len])];
        break;
      }
    }
    if (!index) throw Error(Errc::MalformedPayload, "bit stream holds no valid Huffman code");
    if (escape_index_ && *index == *escape_index_) {
      out.push_back(static_cast<std::int64_t>(in.read_bits(kRawEscapeBits)));
    } else {
      out.push_back(symbols_[*index]);
    }
  }
  return out;
}

HuffmanCode huffman_build(const SymbolModel& model) { return HuffmanCode(model); }

Encoded encode_huffman(const DeltaSeq& ds, const HuffmanCode& code, const Alphabet& a) {
  validate(ds);
  const std::size_t n = ds.point_count();
  if (n >= a.base()) {
    throw Error(Errc::ValueOutOfRange, "point count " + std::to_string(n) + " does not fit one character");
  }
  BitString bits;
  const auto values = ds.values();
  code.encode(values, bits);
  std::string payload(1, a.char_at(n));
  payload += pack_bits(bits, a);
  return {CodecId::Huffman, ds.kind, std::move(payload)};
}

DeltaSeq decode_huffman(const Encoded& enc, const HuffmanCode& code, const Alphabet& a, const SeqContext& ctx) {
  const std::string_view s = enc.payload;
  if (s.empty()) throw Error(Errc::MalformedPayload, "empty Huffman payload");
  auto n = a.index_of(s[0]);
  if (!n || *n < 4) throw Error(Errc::MalformedPayload, "invalid point-count character", 0);
  BitString bits;
  try {
    bits = unpack_bits(s.substr(1), a);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), e.position() ? std::optional<std::size_t>(*e.position() + 1) : std::nullopt);
  }
  BitReader in(bits);
  const std::size_t pairs = *n - (enc.transform == Transform::DeltaMin ? 1 : 2);
  auto values = code.decode(in, 2 + 2 * pairs);
  if (in.position() > bits.size()) throw Error(Errc::MalformedPayload, "Huffman payload truncated");
  return delta_seq_from_values(enc.transform, values, ctx.origin, ctx.precision);
}

}  // namespace polycomp
