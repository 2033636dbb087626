#include "lensurg/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "lensurg/errors.hpp"

namespace lensurg {

std::vector<int> IntersectionForm::weights() const {
    std::vector<int> a(coefficients.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = -to_int(coefficients[i]);
    return a;
}

IntersectionForm form_from_string(std::span<const Integer> coefficients) {
    const int n = static_cast<int>(coefficients.size());
    IntersectionForm form{{coefficients.begin(), coefficients.end()}, IntMatrix::Zero(n, n)};
    for (int i = 0; i < n; ++i) {
        if (coefficients[i] > -1) {
            throw DomainError("intersection form needs coefficients <= -1, got [" + format_terms(coefficients) + "]");
        }
        form.matrix(i, i) = to_int(coefficients[i]);
        if (i + 1 < n) form.matrix(i, i + 1) = form.matrix(i + 1, i) = 1;
    }
    return form;
}

bool verify_embedding(const IntersectionForm& form, const LatticeEmbedding& emb) {
    const int n = form.rank();
    if (emb.rows() != n || emb.cols() != n) {
        throw DimensionMismatch("embedding is " + std::to_string(emb.rows()) + "x" + std::to_string(emb.cols()) +
                                ", form has rank " + std::to_string(n));
    }
    return gram(emb) == form.matrix;
}

bool matrix_less(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    if (a.cols() != b.cols()) return a.cols() < b.cols();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
        }
    }
    return false;
}

LatticeEmbedding canonical_form(const LatticeEmbedding& emb) {
    const Eigen::Index rows = emb.rows();
    std::vector<std::vector<int>> columns;
    columns.reserve(static_cast<std::size_t>(emb.cols()));
    for (Eigen::Index j = 0; j < emb.cols(); ++j) {
        std::vector<int> col(static_cast<std::size_t>(rows));
        for (Eigen::Index i = 0; i < rows; ++i) col[static_cast<std::size_t>(i)] = emb(i, j);
        auto first = std::find_if(col.begin(), col.end(), [](int x) { return x != 0; });
        if (first != col.end() && *first > 0) {
            for (int& x : col) x = -x;
        }
        columns.push_back(std::move(col));
    }
    std::sort(columns.begin(), columns.end());
    LatticeEmbedding out(rows, emb.cols());
    for (Eigen::Index j = 0; j < emb.cols(); ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) out(i, j) = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return out;
}

bool embeddings_equivalent(const LatticeEmbedding& a, const LatticeEmbedding& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool entries_unit_bounded(const LatticeEmbedding& emb) { return emb.cwiseAbs().maxCoeff() <= 1; }

std::string sign_table(const LatticeEmbedding& emb) {
    std::string out;
    for (Eigen::Index i = 0; i < emb.rows(); ++i) {
        out += "v" + std::to_string(i + 1) + " |";
        for (Eigen::Index j = 0; j < emb.cols(); ++j) {
            const int x = emb(i, j);
            out += ' ';
            if (x == 1) out += '+';
            else if (x == -1) out += '-';
            else if (x == 0) out += '0';
            else out += std::to_string(x);
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Search

namespace {

// Depth-first assignment of rows v_1..v_n. Columns are introduced in order:
// a row first chooses values on already used columns (these carry all of its
// dot products with earlier rows), then spreads the remaining norm over fresh
// columns as a non-increasing sequence of positive entries. Fresh columns are
// interchangeable and sign-free, so this loses no equivalence class.
class EmbeddingSearch {
public:
    explicit EmbeddingSearch(std::vector<int> weights)
        : a_(std::move(weights)),
          n_(static_cast<int>(a_.size())),
          lam_(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_), 0)),
          suffix_(static_cast<std::size_t>(n_), std::vector<int>(static_cast<std::size_t>(n_) + 1, 0)),
          last_(static_cast<std::size_t>(n_), -1),
          col_rows_(static_cast<std::size_t>(n_)),
          twin_(static_cast<std::size_t>(n_)),
          dot_(static_cast<std::size_t>(n_), 0) {}

    std::vector<LatticeEmbedding> run() {
        if (n_ > 0) next_row(0);
        std::vector<LatticeEmbedding> out(found_.begin(), found_.end());
        return out;
    }

private:
    struct Cmp {
        bool operator()(const IntMatrix& x, const IntMatrix& y) const { return matrix_less(x, y); }
    };

    int target(int k) const { return k == row_ - 1 ? -1 : 0; }

    void next_row(int i) {
        if (i == n_) {
            LatticeEmbedding emb(n_, n_);
            for (int r = 0; r < n_; ++r)
                for (int c = 0; c < n_; ++c) emb(r, c) = lam_[r][c];
            found_.insert(canonical_form(emb));
            return;
        }
        row_ = i;
        find_twins(i);
        touched_.clear();
        if (i > 0) touched_.push_back(i - 1);
        place(0, a_[static_cast<std::size_t>(i)]);
        row_ = i;
    }

    // Deficient rows still need a correction before their last column passes.
    bool any_deficient(int& limit) const {
        bool any = false;
        for (int k : touched_) {
            if (dot_[k] != target(k)) {
                any = true;
                limit = std::min(limit, last_[k]);
            }
        }
        return any;
    }

    // Columns that agree on rows 0..i-1 can be permuted freely, so row i
    // takes non-increasing values along each such class.
    void find_twins(int i) {
        auto& twin = twin_[static_cast<std::size_t>(i)];
        twin.assign(static_cast<std::size_t>(n_), -1);
        for (int j = 1; j < used_; ++j) {
            for (int k = j - 1; k >= 0; --k) {
                bool same = true;
                for (int r = 0; r < i && same; ++r) same = lam_[r][j] == lam_[r][k];
                if (same) {
                    twin[j] = k;
                    break;
                }
            }
        }
    }

    int bound_at(int j) const {
        const int k = twin_[static_cast<std::size_t>(row_)][j];
        return k < 0 ? std::numeric_limits<int>::max() : lam_[row_][k];
    }

    void place(int start, int rem) {
        const int i = row_;
        int limit = used_ - 1;
        const bool deficient = any_deficient(limit);
        // the fresh branch leaves start..used_-1 at zero
        bool tail_zero_ok = true;
        for (int j = start; j < used_ && tail_zero_ok; ++j) tail_zero_ok = bound_at(j) >= 0;
        if (!deficient && tail_zero_ok) fresh(rem, rem, used_);
        if (rem == 0) return;
        for (int j = start; j <= limit; ++j) {
            const int cap = bound_at(j);
            for (int mag = 1; mag * mag <= rem; ++mag) {
                for (int x : {mag, -mag}) {
                    if (x > cap) continue;
                    if (try_value(j, x, rem)) {
                        lam_[i][j] = x;
                        place(j + 1, rem - x * x);
                        lam_[i][j] = 0;
                        row_ = i;
                    }
                    undo_value(j, x);
                }
            }
            if (cap < 0) break;  // column j cannot stay zero
        }
    }

    // Applies x at column j to the running dot products; false when a row is
    // finished with the wrong value or can no longer be corrected.
    bool try_value(int j, int x, int rem) {
        const int left = rem - x * x;
        bool ok = true;
        for (const auto& [k, v] : col_rows_[j]) {
            if (std::find(touched_.begin(), touched_.end(), k) == touched_.end()) touched_.push_back(k);
            dot_[k] += x * v;
            const int gap = target(k) - dot_[k];
            if (gap == 0) continue;
            if (last_[k] == j) {
                ok = false;
                continue;
            }
            // Cauchy-Schwarz on the rest of row k
            if (static_cast<long>(gap) * gap > static_cast<long>(left) * suffix_[k][j + 1]) ok = false;
        }
        return ok;
    }

    void undo_value(int j, int x) {
        for (const auto& [k, v] : col_rows_[j]) dot_[k] -= x * v;
    }

    // Remaining norm over fresh columns: non-increasing positive parts.
    void fresh(int rem, int cap, int col) {
        const int i = row_;
        if (rem == 0) {
            commit_and_recurse(i, col);
            return;
        }
        if (col >= n_) return;
        for (int x = std::min(cap, isqrt_int(rem)); x >= 1; --x) {
            lam_[i][col] = x;
            fresh(rem - x * x, x, col + 1);
            lam_[i][col] = 0;
        }
    }

    static int isqrt_int(int v) {
        int r = 0;
        while ((r + 1) * (r + 1) <= v) ++r;
        return r;
    }

    void commit_and_recurse(int i, int new_used) {
        const int old_used = used_;
        const auto saved_touched = touched_;
        std::vector<int>& row = lam_[i];
        int last = -1;
        for (int c = 0; c < n_; ++c) {
            if (row[c] != 0) {
                col_rows_[c].emplace_back(i, row[c]);
                last = c;
            }
        }
        last_[i] = last;
        for (int c = n_ - 1; c >= 0; --c) suffix_[i][c] = suffix_[i][c + 1] + row[c] * row[c];
        for (int k : touched_) dot_[k] = 0;
        used_ = new_used;

        next_row(i + 1);

        used_ = old_used;
        for (int c = 0; c < n_; ++c) {
            if (row[c] != 0) col_rows_[c].pop_back();
        }
        last_[i] = -1;
        touched_ = saved_touched;
        // restore the running dots of row i's search
        for (int k : touched_) dot_[k] = 0;
        for (int c = 0; c < old_used; ++c) {
            if (row[c] == 0) continue;
            for (const auto& [k, v] : col_rows_[c]) dot_[k] += row[c] * v;
        }
        row_ = i;
    }

    std::vector<int> a_;
    int n_;
    std::vector<std::vector<int>> lam_;
    std::vector<std::vector<int>> suffix_;  // suffix_[k][j] = sum of squares of row k from column j on
    std::vector<int> last_;
    std::vector<std::vector<std::pair<int, int>>> col_rows_;
    std::vector<std::vector<int>> twin_;  // twin_[i][j]: previous column equal to j on rows < i
    std::vector<int> dot_;
    std::vector<int> touched_;
    int used_ = 0;
    int row_ = 0;
    std::set<IntMatrix, Cmp> found_;
};

}  // namespace

std::vector<LatticeEmbedding> find_embeddings(const IntersectionForm& form, const SearchOptions& options) {
    const auto a = form.weights();
    if (a.empty()) return {};
    const ConvergentTable table = convergents(to_integers(a));
    const Integer& det = table.P(static_cast<long>(a.size()));
    if (det == 0) return {};
    if (options.determinant_prefilter && !is_square(det)) return {};
    return EmbeddingSearch(a).run();
}

// ---------------------------------------------------------------------------
// Explicit tables

namespace {

// 1-based row/column access for transcribing the tables.
class Table {
public:
    explicit Table(int n) : m_(IntMatrix::Zero(n, n)) {}
    void set(int row, int col, int value) { m_(row - 1, col - 1) = value; }
    void set_range(int row, int from, int to, int value) {
        for (int c = from; c <= to; ++c) set(row, c, value);
    }
    IntMatrix take() { return std::move(m_); }

private:
    IntMatrix m_;
};

IntMatrix table_t2_t3(bool t3, int s, int t) {
    const int n = s + t + 4;
    Table T(n);
    for (int i = 1; i <= t - 1; ++i) {
        T.set(i, t + 4 - i, -1);
        T.set(i, t + 5 - i, 1);
    }
    if (t >= 1) {
        T.set(t, 3, -1);
        T.set(t, 5, 1);
    }
    T.set(t + 1, 2, 1);
    T.set(t + 1, 3, 1);
    T.set(t + 1, 4, 1);
    T.set(t + 2, 1, 1);
    T.set(t + 2, 2, -1);
    if (t3) {
        T.set_range(t + 1, t + 5, t + s + 4, 1);
    } else {
        T.set_range(t + 2, t + 5, t + s + 4, -1);
    }
    T.set(t + 3, 2, 1);
    T.set(t + 3, 3, -1);
    T.set_range(t + 3, 5, t + 4, -1);
    T.set(t + 4, 1, -1);
    T.set(t + 4, 2, -1);
    T.set(t + 4, 4, 1);
    if (s >= 1) {
        T.set(t + 5, t3 ? 4 : 1, t3 ? -1 : 1);
        T.set(t + 5, t + 5, 1);
    }
    for (int k = 1; k <= s - 1; ++k) {
        T.set(t + 5 + k, t + 4 + k, -1);
        T.set(t + 5 + k, t + 5 + k, 1);
    }
    return T.take();
}

IntMatrix table_t5_t6(bool t6, int s, int t) {
    const int n = s + t + 4;
    Table T(n);
    T.set(1, 1, 1);
    T.set(1, 2, -1);
    T.set_range(1, 5, t + 4, 1);
    T.set(2, 2, 1);
    T.set(2, 3, -1);
    T.set(3, 1, -1);
    T.set(3, 2, -1);
    T.set(3, 4, 1);
    if (t6) {
        T.set_range(3, t + 5, t + s + 4, 1);
    } else {
        T.set_range(2, t + 5, t + s + 4, -1);
    }
    if (t >= 1) {
        T.set(4, 1, 1);
        T.set(4, 5, -1);
    }
    for (int i = 5; i <= t + 3; ++i) {
        T.set(i, i, 1);
        T.set(i, i + 1, -1);
    }
    T.set(t + 4, 2, 1);
    T.set(t + 4, 3, 1);
    T.set(t + 4, 4, 1);
    // at t = 0 the column e_{t+4} is e_4; the fourth entry moves to e_1
    T.set(t + 4, t == 0 ? 1 : t + 4, 1);
    if (s >= 1) {
        T.set(t + 5, t6 ? 4 : 3, -1);
        T.set(t + 5, t + 5, 1);
    }
    for (int k = 1; k <= s - 1; ++k) {
        T.set(t + 5 + k, t + 4 + k, -1);
        T.set(t + 5 + k, t + 5 + k, 1);
    }
    return T.take();
}

IntMatrix table_t7(int s, int t) {
    const int n = s + t + 5;
    Table T(n);
    T.set(1, 1, 1);
    T.set(1, 2, 1);
    T.set(1, 3, 1);
    T.set_range(1, 6, t + 5, 1);
    T.set(2, 3, -1);
    T.set(2, 4, 1);
    T.set(3, 2, -1);
    T.set(3, 3, 1);
    T.set(3, 5, 1);
    T.set_range(3, t + 6, t + s + 5, 1);
    T.set(4, 1, 1);
    T.set(4, 3, -1);
    T.set(4, 4, -1);
    if (t >= 1) {
        T.set(5, 1, -1);
        T.set(5, 6, 1);
    }
    for (int i = 6; i <= t + 4; ++i) {
        T.set(i, i, -1);
        T.set(i, i + 1, 1);
    }
    T.set(t + 5, 2, 1);
    T.set(t + 5, 5, 1);
    // at t = 0 the column e_{t+5} is e_5; the third entry moves to e_1
    T.set(t + 5, t == 0 ? 1 : t + 5, -1);
    if (s >= 1) {
        T.set(t + 6, 5, -1);
        T.set(t + 6, t + 6, 1);
    }
    for (int k = 1; k <= s - 1; ++k) {
        T.set(t + 6 + k, t + 5 + k, -1);
        T.set(t + 6 + k, t + 6 + k, 1);
    }
    return T.take();
}

// Seed embedding of T1 or T4 carried along the (a)/(b) history. `special` is
// the column met only by the first and last rows, with entries x and y there.
IntMatrix table_seeded(StringType type, const std::string& history) {
    std::vector<std::vector<int>> rows;
    int special;
    int x;
    int y;
    if (type == StringType::T1) {
        rows = {{1, -1, 0}, {0, 1, -1}, {-1, -1, 0}};
        special = 0;
        x = 1;
        y = -1;
    } else {
        rows = {{0, 1, 1, 1}, {1, -1, 0, 0}, {0, 1, -1, 0}, {-1, -1, 0, 1}};
        special = 3;
        x = 1;
        y = 1;
    }
    for (char op : history) {
        for (auto& r : rows) r.push_back(0);
        const std::size_t width = rows.front().size();
        const int f = static_cast<int>(width) - 1;
        std::vector<int> fresh(width, 0);
        fresh[static_cast<std::size_t>(f)] = 1;
        if (op == 'a') {
            fresh[static_cast<std::size_t>(special)] = -x;
            rows.back()[static_cast<std::size_t>(f)] = x * y;
            rows.insert(rows.begin(), fresh);
            y = x * y;
            x = 1;
        } else {
            fresh[static_cast<std::size_t>(special)] = -y;
            rows.front()[static_cast<std::size_t>(f)] = x * y;
            rows.push_back(fresh);
            x = x * y;
            y = 1;
        }
        special = f;
    }
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

}  // namespace

LatticeEmbedding table_embedding(const LiscaString& ls) {
    IntMatrix m;
    switch (ls.type) {
        case StringType::T1:
        case StringType::T4: m = table_seeded(ls.type, ls.history); break;
        case StringType::T2: m = table_t2_t3(false, ls.s, ls.t); break;
        case StringType::T3: m = table_t2_t3(true, ls.s, ls.t); break;
        case StringType::T5: m = table_t5_t6(false, ls.s, ls.t); break;
        case StringType::T6: m = table_t5_t6(true, ls.s, ls.t); break;
        case StringType::T7: m = table_t7(ls.s, ls.t); break;
    }
    if (ls.reversed) m = m.colwise().reverse().eval();
    return m;
}

}  // namespace lensurg
