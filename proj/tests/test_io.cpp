#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <limits>
#include <string>

#include "oracles.hpp"
#include "trpca/io.hpp"

using namespace trpca;
namespace fs = std::filesystem;

namespace {

std::vector<std::uint8_t> ppm(const std::string& header, std::vector<std::uint8_t> raster) {
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), raster.begin(), raster.end());
    return out;
}

class TempDir : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("trpca_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

}  // namespace

TEST_F(TempDir, TensorFileRoundTrip) {
    const Tensor3 a = oracle::random_tensor(3, 4, 5, 1);
    write_tensor(dir_ / "a.t3f", a);
    const Tensor3 b = read_tensor(dir_ / "a.t3f");
    EXPECT_EQ(a.shape(), b.shape());
    EXPECT_EQ(0, std::memcmp(a.data().data(), b.data().data(), a.size() * sizeof(double)));
}

TEST(T3F1, HeaderLayout) {
    Tensor3 a(1, 2, 1, {1.0, -0.5});
    const auto bytes = encode_t3f(a);
    ASSERT_EQ(bytes.size(), 16u + 16u);
    EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 4), "T3F1");
    EXPECT_EQ(bytes[4], 1);
    EXPECT_EQ(bytes[8], 2);
    EXPECT_EQ(bytes[12], 1);
    // 1.0 = 0x3FF0000000000000 little-endian.
    EXPECT_EQ(bytes[16 + 7], 0x3F);
    EXPECT_EQ(bytes[16 + 6], 0xF0);
}

TEST(T3F1, RoundTripPreservesSpecialBits) {
    Tensor3 a(1, 1, 3, {-0.0, std::numeric_limits<double>::denorm_min(), 1e308});
    const Tensor3 b = decode_t3f(encode_t3f(a));
    EXPECT_TRUE(std::signbit(b(0, 0, 0)));
    EXPECT_EQ(b(0, 0, 1), std::numeric_limits<double>::denorm_min());
    EXPECT_EQ(b(0, 0, 2), 1e308);
}

TEST(T3F1, BadMagic) {
    auto bytes = encode_t3f(Tensor3(2, 2, 2));
    std::copy_n("XXXX", 4, bytes.begin());
    EXPECT_THROW(decode_t3f(bytes), BadMagic);
    EXPECT_THROW(decode_t3f(std::vector<std::uint8_t>{'T', '3'}), BadMagic);
}

TEST(T3F1, Truncated) {
    auto bytes = encode_t3f(Tensor3(10, 10, 10));
    bytes.resize(bytes.size() - 100 * 8);
    EXPECT_THROW(decode_t3f(bytes), Truncated);
    EXPECT_THROW(decode_t3f(std::vector<std::uint8_t>{'T', '3', 'F', '1', 0}), Truncated);
}

TEST(T3F1, DimensionOverflow) {
    std::vector<std::uint8_t> bytes = {'T', '3', 'F', '1'};
    for (int d = 0; d < 3; ++d)
        for (int b = 0; b < 4; ++b) bytes.push_back(0xFF);
    EXPECT_THROW(decode_t3f(bytes), DimensionOverflow);
}

TEST(T3F1, TrailingBytesRejected) {
    auto bytes = encode_t3f(Tensor3(1, 1, 1));
    bytes.push_back(0);
    EXPECT_THROW(decode_t3f(bytes), MalformedHeader);
}

TEST(T3F1, MissingFile) {
    EXPECT_THROW(read_tensor("/nonexistent/dir/x.t3f"), IoError);
}

TEST(Ppm, WhiteImageIsOnes) {
    const Tensor3 t = image_to_tensor(ppm("P6\n2 2\n255\n", std::vector<std::uint8_t>(12, 255)));
    EXPECT_EQ(t.shape(), (Shape{2, 2, 3}));
    EXPECT_TRUE((t.array() == 1.0).all());
}

TEST(Ppm, ChannelsAreFrontalSlices) {
    // width 3, height 1; pixel j has rgb (10j, 10j+1, 10j+2).
    const Tensor3 t = image_to_tensor(ppm("P6 3 1 255\n", {0, 1, 2, 10, 11, 12, 20, 21, 22}));
    EXPECT_EQ(t.shape(), (Shape{1, 3, 3}));
    EXPECT_DOUBLE_EQ(t(0, 2, 1), 21.0 / 255.0);
    EXPECT_DOUBLE_EQ(t(0, 1, 0), 10.0 / 255.0);
}

TEST(Ppm, RoundTripIsByteIdentical) {
    std::vector<std::uint8_t> raster(4 * 5 * 3);
    for (std::size_t i = 0; i < raster.size(); ++i) raster[i] = static_cast<std::uint8_t>(i * 37 % 256);
    const auto bytes = ppm("P6\n5 4\n255\n", raster);
    EXPECT_EQ(tensor_to_image(image_to_tensor(bytes)), bytes);
}

TEST(Ppm, CommentsInHeader) {
    const Tensor3 t = image_to_tensor(ppm("P6\n# made by hand\n1 1\n# depth\n255\n", {1, 2, 3}));
    EXPECT_DOUBLE_EQ(t(0, 0, 2), 3.0 / 255.0);
}

TEST(Ppm, ClampAndRound) {
    Tensor3 t(1, 2, 3);
    t(0, 0, 0) = 1.5;
    t(0, 0, 1) = -0.2;
    t(0, 0, 2) = 0.5;  // 127.5 rounds half up to 128
    const auto bytes = tensor_to_image(t);
    const std::size_t off = std::string("P6\n2 1\n255\n").size();
    EXPECT_EQ(bytes[off + 0], 255);
    EXPECT_EQ(bytes[off + 1], 0);
    EXPECT_EQ(bytes[off + 2], 128);
}

TEST(Ppm, Errors) {
    EXPECT_THROW(image_to_tensor(ppm("P3\n1 1\n255\n", {1, 2, 3})), UnsupportedFormat);
    EXPECT_THROW(image_to_tensor(ppm("P5\n1 1\n255\n", {1})), UnsupportedFormat);
    EXPECT_THROW(image_to_tensor(ppm("P6\n1 1\n65535\n", {1, 2, 3, 4, 5, 6})), UnsupportedFormat);
    EXPECT_THROW(image_to_tensor(ppm("P6\nx 1\n255\n", {1, 2, 3})), MalformedHeader);
    EXPECT_THROW(image_to_tensor(ppm("P6\n1 1\n255", {})), MalformedHeader);
    EXPECT_THROW(image_to_tensor(ppm("P6\n2 2\n255\n", {1, 2, 3})), Truncated);
    EXPECT_THROW(tensor_to_image(Tensor3(2, 2, 2)), ShapeMismatch);
}

TEST(Corrupt, ZeroFractionIsNoOp) {
    const Tensor3 a = oracle::random_tensor(6, 7, 3, 2);
    const CorruptedImage c = corrupt_pixels(a, 0.0, 1);
    EXPECT_TRUE(c.mask.empty());
    EXPECT_EQ(c.corrupted, a);
}

TEST(Corrupt, FullFractionHitsEveryTube) {
    const Tensor3 a(4, 5, 3);
    const CorruptedImage c = corrupt_pixels(a, 1.0, 2);
    EXPECT_EQ(c.mask.size(), 20u);
    for (std::size_t p = 0; p < 20; ++p) EXPECT_EQ(c.mask[p], p);
}

TEST(Corrupt, WholeTubesAndExactCount) {
    const Tensor3 a(320, 480, 3);
    const CorruptedImage c = corrupt_pixels(a, 0.1, 3);
    EXPECT_EQ(c.mask.size(), 15360u);
    std::size_t changed_tubes = 0;
    for (std::size_t i = 0; i < 320; ++i)
        for (std::size_t j = 0; j < 480; ++j) {
            int changed = 0;
            for (std::size_t k = 0; k < 3; ++k) {
                const double v = c.corrupted(i, j, k);
                EXPECT_GE(v, 0.0);
                EXPECT_LE(v, 1.0);
                changed += v != 0.0;
            }
            changed_tubes += changed > 0;
        }
    // Exact zeros from the uniform draw are possible but have probability ~0.
    EXPECT_EQ(changed_tubes, 15360u);
    EXPECT_EQ(corrupt_pixels(a, 0.1, 3).corrupted, c.corrupted);
}

TEST(Psnr, Values) {
    Tensor3 ref(10, 10, 3);
    ref.array() = 1.0;
    EXPECT_TRUE(std::isinf(psnr(ref, ref)));
    Tensor3 est = ref;
    est.array() += 0.1;
    EXPECT_NEAR(psnr(ref, est), 20.0, 1e-10);
    EXPECT_NEAR(psnr(2.0 * ref, 2.0 * est), psnr(ref, est), 1e-10);
    EXPECT_THROW(psnr(Tensor3(2, 2, 3), Tensor3(2, 2, 3)), ZeroReference);
    EXPECT_THROW(psnr(ref, Tensor3(10, 10, 2)), ShapeMismatch);
}

TEST(Report, JsonAndCsv) {
    Report r;
    r.set("n1", std::size_t{3}).set("lambda", 0.5).set("converged", true).set("note", "a,b");
    r.set("psnr", std::numeric_limits<double>::infinity());
    EXPECT_EQ(r.to_csv(), "key,value\nn1,3\nlambda,0.5\nconverged,true\nnote,\"a,b\"\npsnr,inf\n");
    const std::string json = r.to_json();
    EXPECT_NE(json.find("\"n1\": 3"), std::string::npos);
    EXPECT_NE(json.find("\"psnr\": null"), std::string::npos);
    EXPECT_LT(json.find("n1"), json.find("lambda"));
}

TEST(Report, GridCsv) {
    PhaseGrid g{{0.1}, {0.2, 0.3}, {{0.1, 0.2, 3, 2}, {0.1, 0.3, 3, 0}}};
    EXPECT_EQ(grid_to_csv(g), "r_frac,rho_s,trials,successes\n0.1,0.2,3,2\n0.1,0.3,3,0\n");
    EXPECT_NE(grid_to_json(g).find("\"successes\": 2"), std::string::npos);
}
