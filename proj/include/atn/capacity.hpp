#pragma once

// Session-capacity arithmetic: codec packetization accounting and the
// calibrated per-platform concurrent-session limits.

#include <string>

#include "atn/errors.hpp"

namespace atn {

enum class Media { Voice, Video };

// Codec parameters as carried in scenario files. MOS is reporting metadata
// and is never computed.
struct CodecSpec {
  std::string name;
  Media media = Media::Voice;
  double bit_rate_kbps = 0.0;
  double sample_period_ms = 0.0;       // voice only, 0 for video
  double header_overhead_bytes = 0.0;  // per packet, voice only
  double mos = 0.0;                    // metadata

  friend bool operator==(const CodecSpec&, const CodecSpec&) = default;
};

// Concurrent-session limits of one platform. The voice and video maxima are
// independent calibrations taken from the scenario, not derived from the
// throughput figure (that would need a MAC model this simulator does not
// carry).
struct PlatformCapacity {
  double achievable_throughput_mbps = 0.0;
  int voice_sessions_max = 0;
  int video_sessions_max = 0;

  friend bool operator==(const PlatformCapacity&, const PlatformCapacity&) = default;
};

inline int sessions_max_for(Media media, const PlatformCapacity& cap) {
  return media == Media::Voice ? cap.voice_sessions_max : cap.video_sessions_max;
}

// Per-direction network-layer rate of a voice codec in kb/s. bit_rate *
// sample_period is the payload bits per packet; the header rides on every
// packet. Exists for sanity analysis only; the session maxima stay
// calibrated constants.
inline double ip_packet_rate(const CodecSpec& codec) {
  if (codec.media != Media::Voice)
    throw UnsupportedOperation("ip_packet_rate: defined for voice codecs only");
  if (!(codec.sample_period_ms > 0.0))
    throw ValidationError("ip_packet_rate: sample period must be > 0");
  const double payload_bits_per_packet = codec.bit_rate_kbps * codec.sample_period_ms;
  const double header_bits_per_packet = 8.0 * codec.header_overhead_bytes;
  return (payload_bits_per_packet + header_bits_per_packet) / codec.sample_period_ms;
}

// Fraction of a platform's unit budget one session of the given media takes.
inline double normalized_session_load(Media media, const PlatformCapacity& cap) {
  const int sessions_max = sessions_max_for(media, cap);
  if (sessions_max <= 0)
    throw ValidationError("normalized_session_load: sessions_max must be >= 1");
  return 1.0 / sessions_max;
}

// Slack absorbing float rounding when normalized loads sum to exactly one.
inline constexpr double kLoadTolerance = 1e-12;

// Linear mixed-load admission: the mix fits iff the normalized loads sum to
// at most one.
inline bool fits_on_platform(int voice_n, int video_n, const PlatformCapacity& cap) {
  if (voice_n < 0 || video_n < 0)
    throw ValidationError("fits_on_platform: session counts must be >= 0");
  const double load = voice_n * normalized_session_load(Media::Voice, cap) +
                      video_n * normalized_session_load(Media::Video, cap);
  return load <= 1.0 + kLoadTolerance;
}

}  // namespace atn
