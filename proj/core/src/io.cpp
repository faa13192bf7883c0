#include "trpca/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "trpca/rng.hpp"

namespace trpca {

namespace {

constexpr std::uint8_t kMagic[4] = {'T', '3', 'F', '1'};
constexpr std::size_t kHeaderBytes = 16;

void put_le(std::span<std::uint8_t> out, std::size_t offset, std::uint64_t v, int width) {
    for (int b = 0; b < width; ++b) {
        out[offset + static_cast<std::size_t>(b)] = static_cast<std::uint8_t>(v >> (8 * b));
    }
}

std::uint64_t get_le(std::span<const std::uint8_t> bytes, std::size_t offset, int width) {
    std::uint64_t v = 0;
    for (int b = 0; b < width; ++b) {
        v |= static_cast<std::uint64_t>(bytes[offset + static_cast<std::size_t>(b)]) << (8 * b);
    }
    return v;
}

// Minimal tokenizer for the PPM header: whitespace separated tokens, '#'
// starts a comment that runs to the end of the line.
class PpmHeader {
public:
    explicit PpmHeader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::string token() {
        skip_space_and_comments();
        std::string tok;
        while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
            tok.push_back(static_cast<char>(bytes_[pos_++]));
        }
        return tok;
    }

    std::size_t number(const char* what) {
        const std::string tok = token();
        if (tok.empty() || tok.size() > 9 ||
            !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw MalformedHeader(std::string("PPM ") + what + " is not a number: '" + tok + "'");
        }
        return std::stoul(tok);
    }

    // Exactly one whitespace byte separates maxval from the raster.
    std::size_t raster_offset() {
        if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
            throw MalformedHeader("PPM header not terminated by whitespace");
        }
        return pos_ + 1;
    }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> encode_t3f(const Tensor3& a) {
    constexpr auto max32 = std::numeric_limits<std::uint32_t>::max();
    if (a.n1() > max32 || a.n2() > max32 || a.n3() > max32) {
        throw DimensionOverflow("dimensions of " + to_string(a.shape()) + " exceed uint32");
    }
    std::vector<std::uint8_t> out(kHeaderBytes + 8 * a.size());
    std::copy(std::begin(kMagic), std::end(kMagic), out.begin());
    put_le(out, 4, a.n1(), 4);
    put_le(out, 8, a.n2(), 4);
    put_le(out, 12, a.n3(), 4);
    const auto values = a.data();
    for (std::size_t p = 0; p < values.size(); ++p) {
        put_le(out, kHeaderBytes + 8 * p, std::bit_cast<std::uint64_t>(values[p]), 8);
    }
    return out;
}

Tensor3 decode_t3f(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 4 || !std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
        throw BadMagic("not a T3F1 tensor file");
    }
    if (bytes.size() < kHeaderBytes) throw Truncated("T3F1 header is incomplete");
    const std::uint64_t n1 = get_le(bytes, 4, 4);
    const std::uint64_t n2 = get_le(bytes, 8, 4);
    const std::uint64_t n3 = get_le(bytes, 12, 4);

    // Each factor < 2^32, so n1*n2 cannot overflow; check the last product.
    const std::uint64_t n12 = n1 * n2;
    constexpr std::uint64_t max_count = std::numeric_limits<std::uint64_t>::max() / 8;
    if (n3 != 0 && n12 > max_count / n3) {
        throw DimensionOverflow("T3F1 dimensions overflow the addressable size");
    }
    const std::uint64_t count = n12 * n3;
    const std::uint64_t payload = bytes.size() - kHeaderBytes;
    if (payload < 8 * count) {
        throw Truncated("T3F1 payload has " + std::to_string(payload / 8) + " of " +
                        std::to_string(count) + " values");
    }
    if (payload > 8 * count) throw MalformedHeader("T3F1 file has trailing bytes");

    std::vector<double> data(count);
    for (std::uint64_t p = 0; p < count; ++p) {
        data[p] = std::bit_cast<double>(get_le(bytes, kHeaderBytes + 8 * p, 8));
    }
    return Tensor3(n1, n2, n3, std::move(data));
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError("read failed: " + path.string());
    return bytes;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed: " + path.string());
}

void write_tensor(const std::filesystem::path& path, const Tensor3& a) {
    write_file_bytes(path, encode_t3f(a));
}

Tensor3 read_tensor(const std::filesystem::path& path) {
    return decode_t3f(read_file_bytes(path));
}

Tensor3 image_to_tensor(std::span<const std::uint8_t> ppm) {
    PpmHeader header(ppm);
    const std::string magic = header.token();
    if (magic != "P6") throw UnsupportedFormat("expected binary PPM (P6), got '" + magic + "'");
    const std::size_t width = header.number("width");
    const std::size_t height = header.number("height");
    const std::size_t maxval = header.number("maxval");
    if (width == 0 || height == 0) throw MalformedHeader("PPM has an empty raster");
    if (maxval != 255) {
        throw UnsupportedFormat("only 8-bit PPM (maxval 255) is supported, got " +
                                std::to_string(maxval));
    }
    const std::size_t offset = header.raster_offset();
    const std::size_t needed = width * height * 3;
    if (ppm.size() < offset + needed) throw Truncated("PPM raster is incomplete");

    Tensor3 t(height, width, 3);
    for (std::size_t i = 0; i < height; ++i) {
        for (std::size_t j = 0; j < width; ++j) {
            for (std::size_t c = 0; c < 3; ++c) {
                t(i, j, c) = ppm[offset + (i * width + j) * 3 + c] / 255.0;
            }
        }
    }
    return t;
}

std::vector<std::uint8_t> tensor_to_image(const Tensor3& a) {
    if (a.n3() != 3 || a.n1() == 0 || a.n2() == 0) {
        throw ShapeMismatch("image tensors are n1 x n2 x 3, got " + to_string(a.shape()));
    }
    const std::string header =
        "P6\n" + std::to_string(a.n2()) + " " + std::to_string(a.n1()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(header.size() + a.size());
    for (std::size_t i = 0; i < a.n1(); ++i) {
        for (std::size_t j = 0; j < a.n2(); ++j) {
            for (std::size_t c = 0; c < 3; ++c) {
                const double v = std::clamp(a(i, j, c), 0.0, 1.0);
                out.push_back(static_cast<std::uint8_t>(std::floor(v * 255.0 + 0.5)));
            }
        }
    }
    return out;
}

CorruptedImage corrupt_pixels(const Tensor3& a, double fraction, std::uint64_t seed) {
    if (!(fraction >= 0.0 && fraction <= 1.0)) {
        throw InvalidArgument("corruption fraction must be in [0,1]");
    }
    const std::size_t pixels = a.n1() * a.n2();
    const auto count = static_cast<std::size_t>(std::floor(fraction * static_cast<double>(pixels)));

    Rng rng(seed);
    std::vector<std::size_t> order(pixels);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
        std::swap(order[i], order[i + rng.uniform_index(pixels - i)]);
    }

    CorruptedImage out{a, {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(count)}};
    for (std::size_t p : out.mask) {
        const std::size_t i = p / a.n2();
        const std::size_t j = p % a.n2();
        for (std::size_t c = 0; c < a.n3(); ++c) out.corrupted(i, j, c) = rng.uniform();
    }
    std::sort(out.mask.begin(), out.mask.end());
    return out;
}

double psnr(const Tensor3& reference, const Tensor3& estimate) {
    reference.require_same_shape(estimate, "psnr");
    const double peak = linf_norm(reference);
    if (peak == 0.0) throw ZeroReference("PSNR needs a nonzero reference");
    const double diff = fro_norm(estimate - reference);
    if (diff == 0.0) return std::numeric_limits<double>::infinity();
    const double mse = diff * diff / static_cast<double>(reference.size());
    return 10.0 * std::log10(peak * peak / mse);
}

// --- reports --------------------------------------------------------------

namespace {

nlohmann::ordered_json to_json_value(const Report::Value& v) {
    return std::visit(
        [](const auto& x) -> nlohmann::ordered_json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                if (!std::isfinite(x)) return nullptr;
            }
            return x;
        },
        v);
}

std::string csv_cell(const Report::Value& v) {
    if (const auto* s = std::get_if<std::string>(&v)) {
        if (s->find_first_of(",\"\n") == std::string::npos) return *s;
        std::string quoted = "\"";
        for (char c : *s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    }
    if (const auto* d = std::get_if<double>(&v)) {
        if (std::isnan(*d)) return "nan";
        if (std::isinf(*d)) return *d > 0 ? "inf" : "-inf";
    }
    return to_json_value(v).dump();
}

}  // namespace

Report& Report::put(std::string key, Value value) {
    for (auto& [k, v] : fields_) {
        if (k == key) {
            v = std::move(value);
            return *this;
        }
    }
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
}

const Report::Value* Report::find(const std::string& key) const {
    for (const auto& [k, v] : fields_) {
        if (k == key) return &v;
    }
    return nullptr;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : fields_) j[k] = to_json_value(v);
    return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
    std::string out = "key,value\n";
    for (const auto& [k, v] : fields_) out += k + "," + csv_cell(v) + "\n";
    return out;
}

std::string grid_to_csv(const PhaseGrid& grid) {
    std::string out = "r_frac,rho_s,trials,successes\n";
    for (const PhaseCell& c : grid.cells) {
        out += csv_cell(c.r_frac) + "," + csv_cell(c.rho_s) + "," + std::to_string(c.trials) +
               "," + std::to_string(c.successes) + "\n";
    }
    return out;
}

std::string grid_to_json(const PhaseGrid& grid) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const PhaseCell& c : grid.cells) {
        cells.push_back({{"r_frac", c.r_frac},
                         {"rho_s", c.rho_s},
                         {"trials", c.trials},
                         {"successes", c.successes}});
    }
    nlohmann::ordered_json j;
    j["cells"] = std::move(cells);
    return j.dump(2) + "\n";
}

}  // namespace trpca
