#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "atn/capacity.hpp"

using namespace atn;
using Catch::Approx;

namespace {

CodecSpec amr(double sample_period_ms, double header_bytes) {
  return CodecSpec{"AMR", Media::Voice, 12.2, sample_period_ms, header_bytes, 3.8};
}

const PlatformCapacity kLapCap{54.0, 78, 18};

}  // namespace

TEST_CASE("ip_packet_rate packetization accounting") {
  // Hand arithmetic: 12.2 kb/s * 20 ms = 244 payload bits, 40 B = 320 header
  // bits, (244 + 320) bits per 20 ms packet.
  CHECK(ip_packet_rate(amr(20.0, 40.0)) == Approx((244.0 + 320.0) / 20.0));
  CHECK(ip_packet_rate(amr(20.0, 40.0)) == Approx(28.2));
  // 40 ms packets: 488 + 320 bits per packet.
  CHECK(ip_packet_rate(amr(40.0, 40.0)) == Approx(20.2));
  // Overhead-free identity.
  CHECK(ip_packet_rate(amr(20.0, 0.0)) == Approx(12.2));

  const CodecSpec h264{"H.264", Media::Video, 384.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS(ip_packet_rate(h264), UnsupportedOperation);

  // Strictly decreasing in the sample period while overhead is positive.
  double previous = ip_packet_rate(amr(5.0, 40.0));
  for (double sp : {10.0, 20.0, 40.0, 80.0, 160.0}) {
    const double rate = ip_packet_rate(amr(sp, 40.0));
    CHECK(rate < previous);
    previous = rate;
  }
}

TEST_CASE("normalized_session_load") {
  CHECK(normalized_session_load(Media::Voice, kLapCap) == Approx(1.0 / 78.0));
  CHECK(normalized_session_load(Media::Voice, kLapCap) == Approx(0.012821).margin(1e-6));
  CHECK(normalized_session_load(Media::Video, kLapCap) == Approx(1.0 / 18.0));
  CHECK(normalized_session_load(Media::Video, kLapCap) == Approx(0.055556).margin(1e-6));
  CHECK(normalized_session_load(Media::Voice, PlatformCapacity{1.0, 1, 1}) == 1.0);
  CHECK_THROWS_AS(normalized_session_load(Media::Voice, PlatformCapacity{54.0, 0, 18}),
                  ValidationError);
}

TEST_CASE("fits_on_platform pure-type limits") {
  CHECK(fits_on_platform(78, 0, kLapCap));
  CHECK_FALSE(fits_on_platform(79, 0, kLapCap));
  CHECK(fits_on_platform(0, 18, kLapCap));
  CHECK_FALSE(fits_on_platform(0, 19, kLapCap));
  // Exactly one unit of load: 39/78 + 9/18 = 1.
  CHECK(fits_on_platform(39, 9, kLapCap));
  CHECK_FALSE(fits_on_platform(40, 9, kLapCap));
  CHECK_THROWS_AS(fits_on_platform(-1, 0, kLapCap), ValidationError);
}

TEST_CASE("fits_on_platform boundary and monotonicity properties") {
  const PlatformCapacity caps[] = {kLapCap, {10.0, 5, 3}, {1.0, 1, 1}, {100.0, 200, 7}};
  for (const PlatformCapacity& cap : caps) {
    CHECK(fits_on_platform(cap.voice_sessions_max, 0, cap));
    CHECK_FALSE(fits_on_platform(cap.voice_sessions_max + 1, 0, cap));
    CHECK(fits_on_platform(0, cap.video_sessions_max, cap));
    CHECK_FALSE(fits_on_platform(0, cap.video_sessions_max + 1, cap));
  }

  // Removing a session never turns an admitted mix into a rejected one.
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> voice(0, 90);
  std::uniform_int_distribution<int> video(0, 22);
  for (int i = 0; i < 500; ++i) {
    const int v = voice(rng), w = video(rng);
    if (!fits_on_platform(v, w, kLapCap)) continue;
    if (v > 0) CHECK(fits_on_platform(v - 1, w, kLapCap));
    if (w > 0) CHECK(fits_on_platform(v, w - 1, kLapCap));
  }
}
