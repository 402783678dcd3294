// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "blocksplit/errors.hpp"

namespace blocksplit {

namespace {

constexpr const char* kMagicInstance = "blocksplit-instance v1";
constexpr const char* kMagicKtPoint = "blocksplit-ktpoint v1";

void fail(const std::string& msg) { throw std::runtime_error("instance_io: " + msg); }

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_vector(std::ostream& out, const char* key, const Eigen::VectorXd& v) {
  out << key << ' ' << v.size();
  for (Eigen::Index j = 0; j < v.size(); ++j) out << ' ' << fmt(v[j]);
  out << '\n';
}

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  std::string expect_line() {
    std::string line;
    if (!std::getline(in_, line)) fail("unexpected end of input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
  }

  void expect_key(const std::string& key) {
    std::string tok = token();
    if (tok != key) fail("expected key '" + key + "', found '" + tok + "'");
  }

  std::string token() {
    std::string tok;
    if (!(in_ >> tok)) fail("unexpected end of input while reading token");
    return tok;
  }

  std::int64_t integer() {
    std::int64_t v = 0;
    if (!(in_ >> v)) fail("expected integer");
    return v;
  }

  double real() {
    double v = 0;
    if (!(in_ >> v)) fail("expected real");
    return v;
  }

  Eigen::VectorXd vector(const std::string& key) {
    expect_key(key);
    const std::int64_t size = integer();
    if (size < 0) fail("negative vector size");
    Eigen::VectorXd v(size);
    for (Eigen::Index j = 0; j < size; ++j) v[j] = real();
    return v;
  }

 private:
  std::istream& in_;
};

void check_magic_and_kind(Reader& r, const char* kind) {
  const std::string magic = r.expect_line();
  if (magic != kMagicInstance) fail("bad magic line '" + magic + "'");
  r.expect_key("kind");
  const std::string k = r.token();
  if (k != kind) fail("expected kind '" + std::string(kind) + "', found '" + k + "'");
}

}  // namespace

void save_instance(std::ostream& out, const GroupLassoInstance& inst) {
  out << kMagicInstance << '\n';
  out << "kind group-lasso\n";
  out << "d " << inst.d << '\n';
  out << "p " << inst.p << '\n';
  out << "groups " << inst.groups.size();
  for (const Group& g : inst.groups) out << ' ' << g.first << ' ' << g.size;
  out << '\n';
  out << "tau " << inst.tau.size();
  for (double t : inst.tau) out << ' ' << fmt(t);
  out << '\n';
  write_vector(out, "true_signal", inst.true_signal);
  out << "u " << inst.u.rows() << ' ' << inst.u.cols();
  for (Eigen::Index k = 0; k < inst.u.rows(); ++k)
    for (Eigen::Index j = 0; j < inst.u.cols(); ++j) out << ' ' << fmt(inst.u(k, j));
  out << '\n';
  write_vector(out, "beta", inst.beta);
  out << "flipped " << inst.flipped.size();
  for (Eigen::Index k : inst.flipped) out << ' ' << k;
  out << '\n';
  out << "end\n";
}

GroupLassoInstance load_group_lasso_instance(std::istream& in) {
  Reader r(in);
  check_magic_and_kind(r, "group-lasso");
  GroupLassoInstance inst;
  r.expect_key("d");
  inst.d = r.integer();
  r.expect_key("p");
  inst.p = r.integer();
  r.expect_key("groups");
  const std::int64_t m = r.integer();
  inst.groups.resize(static_cast<std::size_t>(m));
  for (auto& g : inst.groups) {
    g.first = r.integer();
    g.size = r.integer();
  }
  r.expect_key("tau");
  const std::int64_t taus = r.integer();
  inst.tau.resize(static_cast<std::size_t>(taus));
  for (auto& t : inst.tau) t = r.real();
  inst.true_signal = r.vector("true_signal");
  r.expect_key("u");
  const std::int64_t rows = r.integer();
  const std::int64_t cols = r.integer();
  inst.u.resize(rows, cols);
  for (Eigen::Index k = 0; k < rows; ++k)
    for (Eigen::Index j = 0; j < cols; ++j) inst.u(k, j) = r.real();
  inst.beta = r.vector("beta");
  r.expect_key("flipped");
  const std::int64_t flips = r.integer();
  inst.flipped.resize(static_cast<std::size_t>(flips));
  for (auto& k : inst.flipped) k = r.integer();
  r.expect_key("end");
  detail::require(inst.true_signal.size() == inst.d && inst.u.rows() == inst.p &&
                      inst.u.cols() == inst.d && inst.beta.size() == inst.p,
                  "load_group_lasso_instance: inconsistent dimensions");
  return inst;
}

void save_instance(std::ostream& out, const ImageRecoveryInstance& inst) {
  out << kMagicInstance << '\n';
  out << "kind image-recovery\n";
  out << "side " << inst.side << '\n';
  out << "q " << inst.q << '\n';
  out << "s " << inst.s << '\n';
  out << "sigma " << fmt(inst.sigma_min) << ' ' << fmt(inst.sigma_max) << '\n';
  out << "kernel_radius " << inst.kernel_radius << '\n';
  out << "snr_db " << fmt(inst.snr1_db) << ' ' << fmt(inst.snr2_db) << '\n';
  write_vector(out, "truth", inst.truth);
  out << "mask_rows " << inst.mask_rows.size();
  for (Eigen::Index k : inst.mask_rows) out << ' ' << k;
  out << '\n';
  write_vector(out, "b", inst.b);
  write_vector(out, "c", inst.c);
  write_vector(out, "w1", inst.w1);
  write_vector(out, "w2", inst.w2);
  out << "end\n";
}

ImageRecoveryInstance load_image_recovery_instance(std::istream& in) {
  Reader r(in);
  check_magic_and_kind(r, "image-recovery");
  ImageRecoveryInstance inst;
  r.expect_key("side");
  inst.side = r.integer();
  r.expect_key("q");
  inst.q = r.integer();
  r.expect_key("s");
  inst.s = r.integer();
  r.expect_key("sigma");
  inst.sigma_min = r.real();
  inst.sigma_max = r.real();
  r.expect_key("kernel_radius");
  inst.kernel_radius = r.integer();
  r.expect_key("snr_db");
  inst.snr1_db = r.real();
  inst.snr2_db = r.real();
  inst.truth = r.vector("truth");
  r.expect_key("mask_rows");
  const std::int64_t q = r.integer();
  inst.mask_rows.resize(static_cast<std::size_t>(q));
  for (auto& k : inst.mask_rows) k = r.integer();
  inst.b = r.vector("b");
  inst.c = r.vector("c");
  inst.w1 = r.vector("w1");
  inst.w2 = r.vector("w2");
  r.expect_key("end");
  detail::require(inst.truth.size() == inst.pixel_count() && inst.b.size() == inst.pixel_count(),
                  "load_image_recovery_instance: inconsistent dimensions");
  inst.blur =
      make_nonstationary_blur(inst.side, inst.sigma_min, inst.sigma_max, inst.kernel_radius);
  return inst;
}

InstanceKind peek_instance_kind(std::istream& in) {
  Reader r(in);
  const std::string magic = r.expect_line();
  if (magic != kMagicInstance) fail("bad magic line '" + magic + "'");
  r.expect_key("kind");
  const std::string k = r.token();
  if (k == "group-lasso") return InstanceKind::group_lasso;
  if (k == "image-recovery") return InstanceKind::image_recovery;
  fail("unknown instance kind '" + k + "'");
  return InstanceKind::group_lasso;
}

namespace {

template <typename T, typename Loader>
T load_file(const std::string& path, Loader loader) {
  std::ifstream in(path, std::ios::binary);
  detail::require(in.good(), "instance_io: cannot open " + path);
  return loader(in);
}

template <typename T>
void save_file(const std::string& path, const T& value,
               void (*saver)(std::ostream&, const T&)) {
  std::ofstream out(path, std::ios::binary);
  detail::require(out.good(), "instance_io: cannot open " + path);
  saver(out, value);
  out.flush();
  detail::require(out.good(), "instance_io: write failed for " + path);
}

}  // namespace

void save_instance_file(const std::string& path, const GroupLassoInstance& inst) {
  save_file<GroupLassoInstance>(path, inst, &save_instance);
}

void save_instance_file(const std::string& path, const ImageRecoveryInstance& inst) {
  save_file<ImageRecoveryInstance>(path, inst, &save_instance);
}

InstanceKind peek_instance_kind_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  detail::require(in.good(), "instance_io: cannot open " + path);
  return peek_instance_kind(in);
}

GroupLassoInstance load_group_lasso_instance_file(const std::string& path) {
  return load_file<GroupLassoInstance>(path,
                                       [](std::istream& in) { return load_group_lasso_instance(in); });
}

ImageRecoveryInstance load_image_recovery_instance_file(const std::string& path) {
  return load_file<ImageRecoveryInstance>(
      path, [](std::istream& in) { return load_image_recovery_instance(in); });
}

void save_kt_point(std::ostream& out, const KTPoint& pt) {
  out << kMagicKtPoint << '\n';
  out << "x_blocks " << pt.x.block_count() << '\n';
  for (Eigen::Index i = 0; i < pt.x.block_count(); ++i) write_vector(out, "x", pt.x.block(i));
  out << "v_blocks " << pt.v_star.block_count() << '\n';
  for (Eigen::Index k = 0; k < pt.v_star.block_count(); ++k)
    write_vector(out, "v", pt.v_star.block(k));
  out << "end\n";
}

KTPoint load_kt_point(std::istream& in) {
  Reader r(in);
  const std::string magic = r.expect_line();
  if (magic != kMagicKtPoint) fail("bad magic line '" + magic + "'");
  KTPoint pt;
  r.expect_key("x_blocks");
  const std::int64_t xb = r.integer();
  std::vector<Eigen::VectorXd> xs;
  xs.reserve(static_cast<std::size_t>(xb));
  for (std::int64_t i = 0; i < xb; ++i) xs.push_back(r.vector("x"));
  r.expect_key("v_blocks");
  const std::int64_t vb = r.integer();
  std::vector<Eigen::VectorXd> vs;
  vs.reserve(static_cast<std::size_t>(vb));
  for (std::int64_t k = 0; k < vb; ++k) vs.push_back(r.vector("v"));
  r.expect_key("end");
  pt.x = BlockVector::from_blocks(std::move(xs));
  pt.v_star = BlockVector::from_blocks(std::move(vs));
  return pt;
}

void save_kt_point_file(const std::string& path, const KTPoint& pt) {
  save_file<KTPoint>(path, pt, &save_kt_point);
}

KTPoint load_kt_point_file(const std::string& path) {
  return load_file<KTPoint>(path, [](std::istream& in) { return load_kt_point(in); });
}

}  // namespace blocksplit
