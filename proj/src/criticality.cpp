#include "rankcrit/criticality.hpp"

#include <algorithm>
#include <exception>

#include "rankcrit/errors.hpp"
#include "rankcrit/linalg.hpp"
#include "rankcrit/rng.hpp"

namespace rankcrit {

namespace {
constexpr uint64_t kTagRow = 0x524f57;    // "ROW"
constexpr uint64_t kTagMg = 0x4d475350;   // "MGSP"
constexpr uint64_t kTagUni = 0x554e49;    // "UNI"

int zero_weight_dim(const Representation& rho) {
    if (!rho.weight_data()) throw NonSplit("zero_weight_dim: no weight data");
    int z = 0;
    for (const auto& w : rho.weight_data()->weights)
        if (std::all_of(w.begin(), w.end(), [](const Rat& x) { return x.is_zero(); })) ++z;
    return z;
}
}  // namespace

std::string to_string(Verdict v) {
    return v == Verdict::Certified ? "Certified" : "UpperBound";
}

MatrixSpace rep_image_space(const Representation& rho) {
    return MatrixSpace::from_spanning(rho.dim_v(), rho.matrices());
}

GenericRank generic_rank_semisimple(const Representation& rho, const SampleOptions& opt) {
    if (!is_nondegenerate(killing_form(rho.algebra())))
        throw DegenerateKilling("generic_rank_semisimple: Killing form degenerate");
    const int r = rho.dim_v() - zero_weight_dim(rho);
    GenericRank sampled = generic_rank(rep_image_space(rho), opt);
    if (sampled.r != r)
        throw InternalInconsistency("generic_rank_semisimple: weight formula gives " +
                                    std::to_string(r) + " but sampling found " +
                                    std::to_string(sampled.r));
    return GenericRank{r, RankProvenance::WeightFormula, sampled.samples_used};
}

MultiplicityReport rnd_multiplicities(const Representation& rho_in, const RootDatum& rd,
                                      const SampleOptions& opt, int oversample) {
    Representation rho = with_weight_basis(rho_in);
    const LieAlgebra& g = rho.algebra();
    if (!is_nondegenerate(killing_form(g)))
        throw DegenerateKilling("rnd_multiplicities: Killing form degenerate");
    const int n = rho.dim_v();
    MatrixSpace image = rep_image_space(rho);
    if (image.dim() != g.dim())
        throw Error("rnd_multiplicities: representation is not faithful");
    Subspace image_span = image.span();
    const int r = n - zero_weight_dim(rho);

    std::vector<HighestWeightSpace> hw = highest_weight_spaces_end(rho, rd);

    MultiplicityReport report;
    report.rep_label = rho.label();
    report.dim_v = n;
    report.generic_rank = r;
    report.provenance = RankProvenance::WeightFormula;
    report.seed = opt.seed;
    report.oversample = oversample;
    report.rows.resize(hw.size());
    std::vector<Subspace> row_spaces(hw.size());
    std::vector<std::exception_ptr> errors(hw.size());

#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < (int)hw.size(); ++idx) {
        try {
            const HighestWeightSpace& h = hw[idx];
            const int l = h.space.dim();
            SampleOptions sub = opt;
            sub.seed = derive_seed(opt.seed, {kTagRow, (uint64_t)idx});
            std::vector<RegularSample> samples = regular_elements(image, r, l + oversample, sub);
            int total_rows = 0;
            std::vector<Matrix> blocks;
            for (const RegularSample& x : samples) {
                blocks.push_back(tangent_constraint_rows(x));
                total_rows += blocks.back().rows();
            }
            Matrix stacked(total_rows, n * n);
            int r0 = 0;
            for (const Matrix& blk : blocks)
                for (int i = 0; i < blk.rows(); ++i, ++r0)
                    for (int j = 0; j < n * n; ++j) stacked(r0, j) = blk(i, j);
            Subspace rnd_rows = restrict_by_constraints(h.space, stacked);
            // multiplicity of mu among the highest weights of the image itself
            Matrix both(l + image_span.dim(), n * n);
            for (int i = 0; i < l; ++i)
                for (int j = 0; j < n * n; ++j) both(i, j) = h.space.basis()(i, j);
            for (int i = 0; i < image_span.dim(); ++i)
                for (int j = 0; j < n * n; ++j) both(l + i, j) = image_span.basis()(i, j);
            int mult_image = l + image_span.dim() - rank(both);
            if (rnd_rows.dim() < mult_image)
                throw InternalInconsistency("rnd_multiplicities: computed row lost image content");
            report.rows[idx] = MultiplicityRow{h.weight,    h.dynkin,       l,
                                               mult_image,  rnd_rows.dim(), l + oversample};
            row_spaces[idx] = std::move(rnd_rows);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);

    report.verdict = Verdict::Certified;
    for (const MultiplicityRow& row : report.rows)
        if (row.mult_rnd != row.mult_image) report.verdict = Verdict::UpperBound;

    // assemble the submodule generated by the computed HW rows
    std::vector<std::pair<std::vector<Rat>, std::vector<Rat>>> seeds;
    for (size_t i = 0; i < hw.size(); ++i)
        for (int j = 0; j < row_spaces[i].dim(); ++j)
            seeds.push_back({row_spaces[i].basis_row(j), hw[i].weight});
    std::optional<std::vector<std::vector<Rat>>> adw = basis_ad_weights(g);
    if (adw) {
        std::vector<std::pair<VectorOp, std::vector<Rat>>> ops;
        for (int i = 0; i < g.dim(); ++i) {
            const Matrix* x = &rho.matrix(i);
            ops.push_back({[x, n](const std::vector<Rat>& v) {
                               return Matrix::commutator(*x, Matrix::unflatten(n, n, v)).flatten();
                           },
                           (*adw)[i]});
        }
        report.rnd_space = Subspace::span_of_rows(weighted_closure(n * n, seeds, ops).rows);
    } else {
        SubspaceBuilder sb(n * n);
        std::vector<std::vector<Rat>> queue;
        for (const auto& [v, w] : seeds)
            if (sb.insert(v)) queue.push_back(v);
        for (size_t head = 0; head < queue.size(); ++head) {
            std::vector<Rat> v = queue[head];
            for (int i = 0; i < g.dim(); ++i) {
                std::vector<Rat> img =
                    Matrix::commutator(rho.matrix(i), Matrix::unflatten(n, n, v)).flatten();
                if (sb.insert(img)) queue.push_back(std::move(img));
            }
        }
        report.rnd_space = sb.to_subspace();
    }
    if (!report.rnd_space.contains(image_span))
        throw InternalInconsistency("rnd_multiplicities: assembled RND lost the image");
    report.rnd_dim = report.rnd_space.dim();
    return report;
}

CriticalityCertificate certify_sym_power_maximal(int m, int e, const SampleOptions& opt,
                                                 int oversample) {
    if (m < 3) throw Error("certify_sym_power_maximal: m >= 3 required (m = 2 images are never maximal)");
    if (e < 1) throw Error("certify_sym_power_maximal: e >= 1 required");
    Representation rho = symmetric_power_poly_rep(m, e * m);
    RootDatum rd = sl_root_datum(rho.algebra_ptr(), m);
    MultiplicityReport report = rnd_multiplicities(rho, rd, opt, oversample);
    CriticalityCertificate cert;
    cert.generic_rank = report.generic_rank;
    cert.rank_provenance = RankProvenance::WeightFormula;
    cert.rnd = report.rnd_space;
    cert.seed = opt.seed;
    for (const MultiplicityRow& row : report.rows) cert.samples_used += row.samples;
    cert.status = (report.verdict == Verdict::Certified &&
                   report.generic_rank == report.dim_v - 1)
                      ? CertStatus::Certified
                      : CertStatus::Inconclusive;
    return cert;
}

Subspace mg_space_sampled(const LieAlgebra& g, int samples, const SampleOptions& opt) {
    Matrix kappa = killing_form(g);
    if (!is_nondegenerate(kappa)) throw DegenerateKilling("mg_space_sampled: Killing degenerate");
    const int d = g.dim();
    Rng rng(derive_seed(opt.seed, {kTagMg}));
    std::vector<std::vector<Rat>> rows;
    auto add_pair = [&](const std::vector<Rat>& x, const std::vector<Rat>& y) {
        std::vector<Rat> kx = kappa.apply(x);
        std::vector<Rat> row((size_t)d * d);
        for (int k = 0; k < d; ++k) {
            if (kx[k].is_zero()) continue;
            for (int l = 0; l < d; ++l)
                if (!y[l].is_zero()) row[(size_t)k * d + l] = kx[k] * y[l];
        }
        rows.push_back(std::move(row));
    };
    for (int s = 0; s < samples; ++s) {
        std::vector<Rat> x((size_t)d);
        for (int i = 0; i < d; ++i) x[i] = rng.entry(opt.height);
        Subspace cent = kernel_basis(g.ad(x));
        // every ordered pair inside the centralizer that actually commutes;
        // for regular x the centralizer is abelian, so all pairs qualify
        for (int a = 0; a < cent.dim(); ++a)
            for (int b = 0; b < cent.dim(); ++b) {
                std::vector<Rat> br = g.bracket(cent.basis_row(a), cent.basis_row(b));
                bool commute = std::all_of(br.begin(), br.end(),
                                           [](const Rat& c) { return c.is_zero(); });
                if (commute) add_pair(cent.basis_row(a), cent.basis_row(b));
            }
        std::vector<Rat> y((size_t)d);
        for (int i = 0; i < cent.dim(); ++i) {
            Rat c = rng.entry(opt.height);
            if (c.is_zero()) continue;
            for (int j = 0; j < d; ++j) y[j] += c * cent.basis()(i, j);
        }
        add_pair(x, y);
        add_pair(x, x);
    }
    Matrix constraint((int)rows.size(), d * d);
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int j = 0; j < d * d; ++j) constraint(i, j) = rows[i][j];
    return restrict_by_constraints(Subspace::full(d * d), constraint);
}

bool unipotent_rnd_check(const Representation& rho_in, const RootDatum& rd, const Subspace& rnd,
                         int trials, const SampleOptions& opt) {
    Representation rho = with_weight_basis(rho_in);
    const int n = rho.dim_v();
    if (rnd.ambient_dim() != n * n)
        throw DimensionMismatch("unipotent_rnd_check: rnd must live in End(V)");
    std::vector<int> zero_idx;
    for (int i = 0; i < n; ++i) {
        const auto& w = rho.weight_data()->weights[i];
        if (std::all_of(w.begin(), w.end(), [](const Rat& x) { return x.is_zero(); }))
            zero_idx.push_back(i);
    }
    if (zero_idx.empty()) return true;
    std::vector<Matrix> nilpotents;
    for (const auto& s : rd.simple) {
        nilpotents.push_back(rho.apply(s.raising));
        nilpotents.push_back(rho.apply(s.lowering));
    }
    if (nilpotents.empty()) return true;
    Rng rng(derive_seed(opt.seed, {kTagUni}));
    for (int t = 0; t < trials; ++t) {
        int len = (int)rng.uniform_int(1, 3);
        Matrix gmat = Matrix::identity(n);
        Matrix ginv = Matrix::identity(n);
        for (int w = 0; w < len; ++w) {
            int pick = (int)rng.uniform_int(0, (int)nilpotents.size() - 1);
            long long c = rng.uniform_int(1, 2) * (rng.uniform_int(0, 1) ? 1 : -1);
            Matrix x = Rat(c) * nilpotents[pick];
            gmat = gmat * unipotent_exponential(x);
            ginv = unipotent_exponential(Rat(-1) * x) * ginv;
        }
        std::vector<Rat> coeffs((size_t)rnd.dim());
        for (int i = 0; i < rnd.dim(); ++i) coeffs[i] = rng.entry(opt.height);
        std::vector<Rat> yflat((size_t)n * n);
        for (int i = 0; i < rnd.dim(); ++i) {
            if (coeffs[i].is_zero()) continue;
            for (int j = 0; j < n * n; ++j) {
                const Rat& b = rnd.basis()(i, j);
                if (!b.is_zero()) yflat[j] += coeffs[i] * b;
            }
        }
        Matrix z = gmat * Matrix::unflatten(n, n, yflat) * ginv;
        for (int v : zero_idx)
            for (int u : zero_idx)
                if (!z(u, v).is_zero()) return false;
    }
    return true;
}

}  // namespace rankcrit
