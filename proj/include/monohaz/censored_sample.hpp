#pragma once

// Right-censored data: follow-up times T = min(X, C) with event
// indicators. Samples are immutable once constructed and always sorted
// by time; ties keep their input order.

#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monohaz {

struct CensoredObservation {
  double time = 0.0;
  bool event = false;  // true iff the follow-up time is an actual event
};

class CensoredSample {
 public:
  static CensoredSample from_observations(std::vector<CensoredObservation> obs) {
    if (obs.empty()) throw std::invalid_argument("empty sample");
    for (const auto& o : obs) {
      if (!(o.time >= 0.0) || !std::isfinite(o.time)) {
        throw std::invalid_argument("observation time must be finite and >= 0");
      }
    }
    std::stable_sort(obs.begin(), obs.end(),
                     [](const CensoredObservation& a,
                        const CensoredObservation& b) { return a.time < b.time; });
    return CensoredSample(std::move(obs));
  }

  const std::vector<CensoredObservation>& observations() const { return obs_; }
  std::size_t size() const { return obs_.size(); }
  const CensoredObservation& operator[](std::size_t i) const { return obs_[i]; }

  double min_time() const { return obs_.front().time; }
  double max_time() const { return obs_.back().time; }

  std::size_t event_count() const {
    std::size_t c = 0;
    for (const auto& o : obs_) c += o.event ? 1 : 0;
    return c;
  }

 private:
  explicit CensoredSample(std::vector<CensoredObservation> obs)
      : obs_(std::move(obs)) {}

  std::vector<CensoredObservation> obs_;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace detail

// CSV layout: two columns `time,event`, one observation per line.
// A literal `time,event` header is tolerated; UTF-8, LF or CRLF.
inline CensoredSample read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<CensoredObservation> obs;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    std::string t = detail::trim(line);
    if (t.empty()) continue;
    if (row == 1 && t == "time,event") continue;
    std::size_t comma = t.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("row " + std::to_string(row) +
                                  ": expected `time,event`");
    }
    std::string time_str = detail::trim(t.substr(0, comma));
    std::string event_str = detail::trim(t.substr(comma + 1));
    double time;
    std::size_t used = 0;
    try {
      time = std::stod(time_str, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("row " + std::to_string(row) +
                                  ": malformed time value `" + time_str + "`");
    }
    if (used != time_str.size()) {
      throw std::invalid_argument("row " + std::to_string(row) +
                                  ": malformed time value `" + time_str + "`");
    }
    if (!(time >= 0.0) || !std::isfinite(time)) {
      throw std::invalid_argument("row " + std::to_string(row) +
                                  ": negative or non-finite time");
    }
    bool event;
    if (event_str == "0") {
      event = false;
    } else if (event_str == "1") {
      event = true;
    } else {
      throw std::invalid_argument("row " + std::to_string(row) +
                                  ": event must be 0 or 1, got `" + event_str +
                                  "`");
    }
    obs.push_back({time, event});
  }
  if (obs.empty()) throw std::invalid_argument("empty sample");
  return CensoredSample::from_observations(std::move(obs));
}

inline void write_csv(const CensoredSample& sample, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out.precision(17);
  for (const auto& o : sample.observations()) {
    out << o.time << ',' << (o.event ? 1 : 0) << '\n';
  }
}

}  // namespace monohaz
