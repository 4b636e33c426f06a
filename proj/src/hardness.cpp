#include "activetime/hardness.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "activetime/error.hpp"
#include "tokens.hpp"

namespace activetime {

int PscInstance::max_entry() const {
  int w = 0;
  for (int value : v) w = std::max(w, value);
  for (const auto& vec : u) {
    for (int value : vec) w = std::max(w, value);
  }
  return w;
}

namespace {

bool non_increasing(std::span<const int> values) {
  return std::is_sorted(values.begin(), values.end(), std::greater<>());
}

}  // namespace

void validate(const PscInstance& psc) {
  if (static_cast<int>(psc.v.size()) != psc.d) {
    throw Error(ErrorCode::DimensionMismatch, "target has dimension " + std::to_string(psc.v.size()));
  }
  for (std::size_t i = 0; i < psc.u.size(); ++i) {
    if (static_cast<int>(psc.u[i].size()) != psc.d) {
      throw Error(ErrorCode::DimensionMismatch, "vector " + std::to_string(i + 1) + " has the wrong dimension");
    }
    if (std::any_of(psc.u[i].begin(), psc.u[i].end(), [](int x) { return x < 1; })) {
      throw Error(ErrorCode::RangeViolation, "vector " + std::to_string(i + 1) + " has an entry below 1");
    }
    if (!non_increasing(psc.u[i])) {
      throw Error(ErrorCode::RangeViolation, "vector " + std::to_string(i + 1) + " is not non-increasing");
    }
  }
  if (std::any_of(psc.v.begin(), psc.v.end(), [](int x) { return x < 0; })) {
    throw Error(ErrorCode::RangeViolation, "target has a negative entry");
  }
  if (!non_increasing(psc.v)) throw Error(ErrorCode::RangeViolation, "target is not non-increasing");
  if (psc.k < 0) throw Error(ErrorCode::RangeViolation, "budget is negative");
}

bool prec(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " entries");
  }
  long long prefix_a = 0;
  long long prefix_b = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    prefix_a += a[j];
    prefix_b += b[j];
    if (prefix_a < prefix_b) return false;
  }
  return true;
}

std::optional<std::vector<int>> psc_exhaustive(const PscInstance& psc) {
  const int n = static_cast<int>(psc.u.size());
  const int k = psc.k;
  if (k > n || k < 0) return std::nullopt;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    std::vector<int> sum(psc.d, 0);
    for (int i : pick) {
      for (int j = 0; j < psc.d; ++j) sum[j] += psc.u[i][j];
    }
    if (prec(sum, psc.v)) return pick;
    int a = k - 1;
    while (a >= 0 && pick[a] == n - k + a) --a;
    if (a < 0) return std::nullopt;
    ++pick[a];
    for (int b = a + 1; b < k; ++b) pick[b] = pick[b - 1] + 1;
  }
}

PscInstance setcover_to_psc(const SetCoverInstance& sc, TransformSlope slope) {
  if (sc.d < 1 || sc.k < 1) throw Error(ErrorCode::RangeViolation, "set cover needs d >= 1 and k >= 1");
  const int s = static_cast<int>(slope);
  const int d = sc.d;
  PscInstance psc;
  psc.d = d;
  psc.k = std::min<int>(sc.k, static_cast<int>(sc.sets.size()));
  const int k = psc.k;

  // Differences use the convention [w]_0 = 0.
  auto transform = [&](const std::vector<int>& w, int offset, int scale) {
    std::vector<int> out(d);
    for (int j = 1; j <= d; ++j) {
      const int prev = j == 1 ? 0 : w[j - 2];
      out[j - 1] = w[j - 1] - prev + offset + scale * (d - j);
    }
    return out;
  };
  for (const auto& set : sc.sets) {
    if (static_cast<int>(set.size()) != d) throw Error(ErrorCode::DimensionMismatch, "set vector length");
    if (std::any_of(set.begin(), set.end(), [](int x) { return x != 0 && x != 1; })) {
      throw Error(ErrorCode::RangeViolation, "set vectors must be 0/1");
    }
    psc.u.push_back(transform(set, 2, s));
  }
  psc.v = transform(std::vector<int>(d, 1), 2 * k, s * k);

  const int u_max = s * (d - 1) + 3;
  const int v_min = 2 * k - 1;
  const int v_max = s * k * (d - 1) + 2 * k + 1;
  for (const auto& vec : psc.u) {
    for (int x : vec) {
      if (x < 1 || x > u_max) {
        throw Error(ErrorCode::RangeViolation, "vector entry " + std::to_string(x) + " outside [1," +
                                                   std::to_string(u_max) + "]");
      }
    }
  }
  for (int x : psc.v) {
    if (x < v_min || x > v_max) {
      throw Error(ErrorCode::RangeViolation, "target entry " + std::to_string(x) + " outside [" +
                                                 std::to_string(v_min) + "," + std::to_string(v_max) + "]");
    }
  }
  validate(psc);
  return psc;
}

ReducedInstance psc_to_active_time(const PscInstance& psc) {
  validate(psc);
  const int n = static_cast<int>(psc.u.size());
  const int d = psc.d;
  int width = 0;
  for (const auto& vec : psc.u) width = std::max(width, vec.empty() ? 0 : vec.front());
  if (n > 0 && !psc.v.empty()) width = std::max(width, (psc.v.front() + n - 1) / n);
  if (width < 2) throw Error(ErrorCode::DegenerateWidth, "block width " + std::to_string(width) + " < 2");

  ReducedInstance out;
  out.block_width = width;
  out.machines = d * width;
  out.baseline_open = n * (width - 1);
  out.instance.g = out.machines;
  const int p = out.machines;
  auto& jobs = out.instance.jobs;
  for (int i = 1; i <= n; ++i) {
    const auto& u = psc.u[i - 1];
    const int block = (i - 1) * width;
    out.special_slots.push_back(block);
    for (int w = 2; w <= width; ++w) {
      const int idle = static_cast<int>(std::count_if(u.begin(), u.end(), [w](int x) { return x >= w; }));
      const int rigid = p - idle;
      if (rigid < 1) throw Error(ErrorCode::RangeViolation, "rigid job count must be positive");
      for (int c = 0; c < rigid; ++c) {
        jobs.push_back(Job{"r" + std::to_string(i) + "_" + std::to_string(w) + "_" + std::to_string(c),
                           block + w - 1, block + w, 1});
      }
    }
    const int flexible = std::accumulate(u.begin(), u.end(), 0) - d;
    for (int c = 0; c < flexible; ++c) {
      jobs.push_back(Job{"f" + std::to_string(i) + "_" + std::to_string(c), block, block + width, 1});
    }
  }
  for (int j = 1; j <= d; ++j) {
    if (psc.v[j - 1] > 0) jobs.push_back(Job{"v" + std::to_string(j), 0, n * width, psc.v[j - 1]});
  }
  activetime::validate(out.instance);
  return out;
}

bool config_fits(const Configuration& config) {
  if (config.lengths.size() > config.empty.size()) {
    throw Error(ErrorCode::TooManyJobs, std::to_string(config.lengths.size()) + " jobs on " +
                                            std::to_string(config.empty.size()) + " machines");
  }
  if (!non_increasing(config.empty) || !non_increasing(config.lengths)) {
    throw Error(ErrorCode::PreconditionViolated, "configuration sequences must be non-increasing");
  }
  long long idle = 0;
  long long demand = 0;
  for (std::size_t j = 0; j < config.lengths.size(); ++j) {
    idle += config.empty[j];
    demand += config.lengths[j];
    if (idle < demand) return false;
  }
  return true;
}

SlotLayout staircase_layout(std::span<const int> empty) {
  SlotLayout layout;
  for (int e : empty) {
    std::vector<int> slots(std::max(e, 0));
    std::iota(slots.begin(), slots.end(), 0);
    layout.push_back(std::move(slots));
  }
  return layout;
}

std::optional<std::vector<std::vector<Placement>>> pack_greedy(const Configuration& config,
                                                               const SlotLayout& layout) {
  if (config.lengths.size() > layout.size()) {
    throw Error(ErrorCode::TooManyJobs, "more jobs than machines");
  }
  int slot_count = 0;
  for (const auto& slots : layout) {
    for (int t : slots) slot_count = std::max(slot_count, t + 1);
  }
  std::vector<std::vector<int>> free(slot_count);  // idle machines per slot, ascending
  for (int machine = 0; machine < static_cast<int>(layout.size()); ++machine) {
    for (int t : layout[machine]) free[t].push_back(machine);
  }

  std::vector<std::vector<Placement>> result(config.lengths.size());
  const int jobs = static_cast<int>(config.lengths.size());
  for (int job = 0; job < jobs; ++job) {
    const int ranks = jobs - job;
    int remaining = config.lengths[job];
    std::vector<bool> used(slot_count, false);
    for (int rank = ranks; rank >= 1 && remaining > 0; --rank) {
      for (int t = 0; t < slot_count && remaining > 0; ++t) {
        if (used[t] || static_cast<int>(free[t].size()) < rank) continue;
        used[t] = true;
        result[job].push_back({free[t][rank - 1], t});
        --remaining;
      }
    }
    if (remaining > 0) return std::nullopt;
    for (const Placement& placed : result[job]) {
      auto& idle = free[placed.slot];
      idle.erase(std::find(idle.begin(), idle.end(), placed.machine));
    }
  }
  return result;
}

PscInstance parse_psc(std::string_view text) {
  PscInstance psc;
  bool seen_d = false;
  bool seen_k = false;
  bool seen_v = false;
  detail::for_each_directive(text, [&](int line_no, const std::vector<std::string_view>& tokens) {
    auto ints = [&] {
      std::vector<int> values;
      for (std::size_t t = 1; t < tokens.size(); ++t) values.push_back(detail::parse_int(tokens[t], line_no));
      return values;
    };
    if (tokens[0] == "d" && tokens.size() == 2) {
      psc.d = detail::parse_int(tokens[1], line_no);
      seen_d = true;
    } else if (tokens[0] == "k" && tokens.size() == 2) {
      psc.k = detail::parse_int(tokens[1], line_no);
      seen_k = true;
    } else if (tokens[0] == "v") {
      psc.v = ints();
      seen_v = true;
    } else if (tokens[0] == "u") {
      psc.u.push_back(ints());
    } else {
      detail::malformed(line_no, tokens);
    }
  });
  if (!seen_d || !seen_k || !seen_v) throw Error(ErrorCode::MalformedLine, "PSC input needs d, k and v lines");
  validate(psc);
  return psc;
}

std::string serialize(const PscInstance& psc) {
  std::ostringstream out;
  out << "d " << psc.d << "\nk " << psc.k << "\nv";
  for (int x : psc.v) out << ' ' << x;
  out << '\n';
  for (const auto& vec : psc.u) {
    out << 'u';
    for (int x : vec) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

SetCoverInstance parse_setcover(std::string_view text) {
  SetCoverInstance sc;
  std::vector<std::vector<int>> members;
  bool seen_d = false;
  bool seen_k = false;
  detail::for_each_directive(text, [&](int line_no, const std::vector<std::string_view>& tokens) {
    if (tokens[0] == "d" && tokens.size() == 2) {
      sc.d = detail::parse_int(tokens[1], line_no);
      seen_d = true;
    } else if (tokens[0] == "k" && tokens.size() == 2) {
      sc.k = detail::parse_int(tokens[1], line_no);
      seen_k = true;
    } else if (tokens[0] == "set") {
      std::vector<int> elements;
      for (std::size_t t = 1; t < tokens.size(); ++t) elements.push_back(detail::parse_int(tokens[t], line_no));
      members.push_back(std::move(elements));
    } else {
      detail::malformed(line_no, tokens);
    }
  });
  if (!seen_d || !seen_k) throw Error(ErrorCode::MalformedLine, "set cover input needs d and k lines");
  for (const auto& elements : members) {
    std::vector<int> indicator(sc.d, 0);
    for (int e : elements) {
      if (e < 1 || e > sc.d) throw Error(ErrorCode::RangeViolation, "element " + std::to_string(e) + " outside universe");
      indicator[e - 1] = 1;
    }
    sc.sets.push_back(std::move(indicator));
  }
  return sc;
}

}  // namespace activetime
