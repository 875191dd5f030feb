#include "liealg/enumerate.hpp"

#include <atomic>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "liealg/classify.hpp"

namespace liealg {

namespace {

constexpr int kMaxDim = 8;

long long inverse_mod(long long a, long long p) {
  long long r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  return ((s0 % p) + p) % p;
}

// Row-echelon span over GF(p); each row is normalized to pivot 1 and reduced
// against the rows inserted before it.
struct ModEchelon {
  int n;
  long long p;
  int count = 0;
  int pivot[kMaxDim];
  long long row[kMaxDim][kMaxDim];

  ModEchelon(int n_, long long p_) : n(n_), p(p_) {}

  void insert(long long* v) {
    for (int r = 0; r < count; ++r) {
      const long long f = v[pivot[r]];
      if (f == 0) continue;
      for (int c = 0; c < n; ++c) v[c] = ((v[c] - f * row[r][c]) % p + p) % p;
    }
    int lead = 0;
    while (lead < n && v[lead] == 0) ++lead;
    if (lead == n) return;
    const long long inv = inverse_mod(v[lead], p);
    for (int c = 0; c < n; ++c) row[count][c] = v[c] * inv % p;
    pivot[count++] = lead;
  }
};

// Full antisymmetric table c[a][b][k] of residues.
struct StructureTable {
  int n;
  int p;
  int c[kMaxDim][kMaxDim][kMaxDim] = {};
  std::vector<std::pair<int, int>> pairs;

  StructureTable(int n_, int p_) : n(n_), p(p_) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
  }

  void set_digit(int index, int value) {
    const auto [i, j] = pairs[index / n];
    const int k = index % n;
    c[i][j][k] = value;
    c[j][i][k] = value == 0 ? 0 : p - value;
  }

  void load(const TensorDigits& digits) {
    for (std::size_t d = 0; d < digits.size(); ++d) set_digit(static_cast<int>(d), digits[d]);
  }

  bool jacobi() const {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          for (int m = 0; m < n; ++m) {
            long long s = 0;
            for (int l = 0; l < n; ++l) {
              s += c[i][j][l] * c[l][k][m] + c[j][k][l] * c[l][i][m] + c[k][i][l] * c[l][j][m];
            }
            if (s % p != 0) return false;
          }
        }
      }
    }
    return true;
  }

  bool nilpotent() const {
    ModEchelon current(n, p);
    long long v[kMaxDim];
    for (const auto& [i, j] : pairs) {
      for (int k = 0; k < n; ++k) v[k] = c[i][j][k];
      current.insert(v);
    }
    while (current.count > 0) {
      ModEchelon next(n, p);
      for (int r = 0; r < current.count; ++r) {
        for (int a = 0; a < n; ++a) {
          for (int m = 0; m < n; ++m) {
            long long s = 0;
            for (int l = 0; l < n; ++l) s += current.row[r][l] * c[a][l][m];
            v[m] = s % p;
          }
          next.insert(v);
        }
      }
      if (next.count == current.count) return false;
      current = next;
    }
    return true;
  }
};

void check_shape(int n, std::uint32_t p) {
  if (n < 1 || n > kMaxDim) {
    throw DimensionMismatch("census dimension must lie in 1.." + std::to_string(kMaxDim));
  }
  if (!is_prime(p)) throw FieldMismatch("census needs a prime field");
}

CensusRow classify_row(std::uint64_t id, const TensorDigits& digits, int n,
                       const FieldSpec& field) {
  const auto result = classify_t012(tensor_algebra(digits, n, field));
  CensusRow row;
  row.tensor_id = id;
  row.n = n;
  row.dim_derived = result.report.dim_derived;
  row.dim_center = result.report.dim_center;
  row.d = result.report.d_central_quotient.value_or(0);
  row.t = result.t;
  row.verdict = result.verdict.to_string();
  return row;
}

struct ChunkResult {
  std::uint64_t lie = 0;
  std::uint64_t nilpotent = 0;
  std::vector<CensusRow> rows;
  std::exception_ptr error;
};

void run_chunk(int n, const FieldSpec& field, std::uint64_t lo, std::uint64_t hi,
               ChunkResult& out) {
  const auto p = static_cast<int>(field.modulus());
  TensorDigits digits = decode(lo, n, field.modulus());
  StructureTable table(n, p);
  table.load(digits);
  for (std::uint64_t id = lo; id < hi; ++id) {
    if (table.jacobi()) {
      ++out.lie;
      if (table.nilpotent()) {
        ++out.nilpotent;
        out.rows.push_back(classify_row(id, digits, n, field));
      }
    }
    for (std::size_t d = 0; d < digits.size(); ++d) {
      if (++digits[d] == p) {
        digits[d] = 0;
        table.set_digit(static_cast<int>(d), 0);
      } else {
        table.set_digit(static_cast<int>(d), digits[d]);
        break;
      }
    }
  }
}

}  // namespace

int pair_count(int n) { return n * (n - 1) / 2; }
int digit_count(int n) { return n * pair_count(n); }

std::uint64_t candidate_count(int n, std::uint32_t p) {
  std::uint64_t total = 1;
  constexpr auto limit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  for (int d = 0; d < digit_count(n); ++d) {
    if (total > limit / p) {
      throw BudgetExceeded("candidate count for dimension " + std::to_string(n) +
                           " over GF(" + std::to_string(p) + ") exceeds 2^63");
    }
    total *= p;
  }
  return total;
}

std::uint64_t encode(const TensorDigits& digits, std::uint32_t p) {
  std::uint64_t id = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < 0 || static_cast<std::uint32_t>(*it) >= p) throw ParseError("tensor digit out of range");
    id = id * p + static_cast<std::uint64_t>(*it);
  }
  return id;
}

TensorDigits decode(std::uint64_t tensor_id, int n, std::uint32_t p) {
  TensorDigits digits(static_cast<std::size_t>(digit_count(n)));
  for (auto& d : digits) {
    d = static_cast<int>(tensor_id % p);
    tensor_id /= p;
  }
  if (tensor_id != 0) throw ParseError("tensor_id exceeds the candidate range");
  return digits;
}

LieAlgebra<Zp> tensor_algebra(const TensorDigits& digits, int n, const FieldSpec& field) {
  if (static_cast<int>(digits.size()) != digit_count(n)) {
    throw DimensionMismatch("tensor has the wrong number of digits");
  }
  std::vector<BracketSpec<Zp>> brackets;
  int pair = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++pair) {
      SparseVector<Zp> value;
      for (int k = 0; k < n; ++k) {
        const int digit = digits[static_cast<std::size_t>(pair * n + k)];
        if (digit != 0) value.emplace_back(k, Zp::from_integer(digit, field.modulus()));
      }
      if (!value.empty()) brackets.push_back({i, j, std::move(value)});
    }
  }
  return LieAlgebra<Zp>::assemble(field, n, std::move(brackets));
}

bool tensor_is_lie(const TensorDigits& digits, int n, std::uint32_t p) {
  check_shape(n, p);
  StructureTable table(n, static_cast<int>(p));
  table.load(digits);
  return table.jacobi();
}

bool tensor_is_nilpotent(const TensorDigits& digits, int n, std::uint32_t p) {
  check_shape(n, p);
  StructureTable table(n, static_cast<int>(p));
  table.load(digits);
  return table.nilpotent();
}

void CensusSummary::write_csv(std::ostream& os) const {
  os << "tensor_id,n,dim_derived,dim_center,d,t,verdict\n";
  for (const auto& r : rows) {
    os << r.tensor_id << ',' << r.n << ',' << r.dim_derived << ',' << r.dim_center << ','
       << r.d << ',' << r.t << ',' << r.verdict << '\n';
  }
}

std::string CensusSummary::summary_text() const {
  std::ostringstream os;
  os << "field " << field.to_string() << "\n"
     << "dim " << n << "\n"
     << "candidates " << candidates << "\n"
     << "lie_algebras " << lie_algebras << "\n"
     << "nilpotent " << nilpotent << "\n";
  for (const auto& [t, count] : t_tally) os << "t=" << t << " " << count << "\n";
  return os.str();
}

CensusSummary enumerate_algebras(int n, const FieldSpec& field, const CensusOptions& options) {
  if (field.is_rational()) throw FieldMismatch("census needs a prime field");
  check_shape(n, field.modulus());
  const std::uint32_t p = field.modulus();
  const std::uint64_t total = candidate_count(n, p);
  if (total > kCensusBudget && !options.force) {
    throw BudgetExceeded(std::to_string(total) + " candidates exceed the budget of " +
                         std::to_string(kCensusBudget) + "; pass --force to run anyway");
  }

  // Chunks fix the high digits, so each covers a contiguous id range.
  std::uint64_t chunks = 1;
  while (chunks * p <= 256 && total % (chunks * p) == 0 && chunks * p <= total) chunks *= p;
  const std::uint64_t chunk_size = total / chunks;
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      try {
        run_chunk(n, field, c * chunk_size, (c + 1) * chunk_size, results[c]);
      } catch (...) {
        results[c].error = std::current_exception();
      }
    }
  };
  const int jobs = static_cast<int>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(options.jobs, 1)), chunks));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }

  CensusSummary summary;
  summary.n = n;
  summary.field = field;
  summary.candidates = total;
  for (auto& chunk : results) {
    if (chunk.error) std::rethrow_exception(chunk.error);
    summary.lie_algebras += chunk.lie;
    summary.nilpotent += chunk.nilpotent;
    for (auto& row : chunk.rows) {
      ++summary.t_tally[row.t];
      if (options.consumer) options.consumer(row);
      summary.rows.push_back(std::move(row));
    }
  }
  return summary;
}

BoundsVerdict verify_bounds(const CensusSummary& census) {
  BoundsVerdict out;
  for (const auto& r : census.rows) {
    auto fail = [&](const std::string& what) {
      out.passed = false;
      out.failures.push_back("tensor_id " + std::to_string(r.tensor_id) + ": " + what);
    };
    if (r.t < 0) fail("t = " + std::to_string(r.t) + " is negative");
    for (int bound = 2; bound <= 4; ++bound) {
      if (r.dim_derived >= bound && r.t < bound - 1) {
        fail("dim L^2 = " + std::to_string(r.dim_derived) + " but t = " + std::to_string(r.t));
        break;
      }
    }
    const long long q = r.quotient_dim();
    if (2LL * r.dim_derived > q * (q - 1)) {
      fail("dim L^2 = " + std::to_string(r.dim_derived) + " exceeds q(q-1)/2 for q = " +
           std::to_string(q));
    }
    if (r.verdict == "COUNTEREXAMPLE") fail("counterexample verdict");
  }
  return out;
}

}  // namespace liealg
