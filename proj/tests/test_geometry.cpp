#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Geometry>

#include "so3contact/geometry.hpp"

using namespace so3contact;
using namespace so3contact::geometry;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I(0, 1);

std::vector<ContactFormId> all_forms(int k_max) {
  std::vector<ContactFormId> out{ContactFormId::alpha_plus(), ContactFormId::alpha_minus()};
  for (int k = 0; k <= k_max; ++k)
    for (int s : {1, -1}) out.push_back(ContactFormId::alpha_k(k, s));
  return out;
}

// <mu, A> straight from the matrix of A.
double pairing(const AmbientPoint& p, const ContactFormId& form, const LieAlgElement& A) {
  return form.moment_scale() * p.x().dot(matrix(A) * p.y());
}

template <std::size_t N>
int permutation_sign(const std::array<int, N>& perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) inversions += perm[i] > perm[j];
  return inversions % 2 ? -1 : 1;
}

// (alpha ^ beta ^ beta)(v_0..v_4) = 1/(1! 2! 2!) sum over S_5.
double brute_volume(const Vec& w, const Eigen::MatrixXd& D, const Frame& f) {
  std::array<int, 5> p{0, 1, 2, 3, 4};
  double total = 0;
  do {
    total += permutation_sign(p) * w.dot(f[p[0]]) * f[p[1]].dot(D * f[p[2]]) *
             f[p[3]].dot(D * f[p[4]]);
  } while (std::next_permutation(p.begin(), p.end()));
  return total / 4.0;
}

double brute_three(const Vec& w, const Eigen::MatrixXd& D, const Vec& a, const Vec& b, const Vec& c) {
  const std::array<const Vec*, 3> v{&a, &b, &c};
  std::array<int, 3> q{0, 1, 2};
  double total = 0;
  do {
    total += permutation_sign(q) * w.dot(*v[q[0]]) * v[q[1]]->dot(D * *v[q[2]]);
  } while (std::next_permutation(q.begin(), q.end()));
  return total / 2.0;
}

// d(alpha) for the forms with constant-coefficient derivative, written out.
Eigen::MatrixXd exact_dalpha(const ContactFormId& form, const Vec& u) {
  const int n = static_cast<int>(u.size());
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  auto block = [&](int j, double c) {
    D(2 * j, 2 * j + 1) = c;  // c dx_j ^ dy_j
    D(2 * j + 1, 2 * j) = -c;
  };
  if (form.kind == ContactFormId::Kind::AlphaK) {
    block(0, 2 * form.sign * (form.k + 1.0));
    for (int j = 1; j <= 3; ++j) block(j, 4.0);
    return D;
  }
  for (int j = 0; j < 3; ++j) block(j, 2.0);
  if (form.kind == ContactFormId::Kind::AlphaMinus) {
    // d(a db - b da) = 2 da ^ db
    Vec ga(n), gb(n);
    for (int j = 0; j < 3; ++j) {
      ga[2 * j] = 2 * u[2 * j];
      ga[2 * j + 1] = -2 * u[2 * j + 1];
      gb[2 * j] = 2 * u[2 * j + 1];
      gb[2 * j + 1] = 2 * u[2 * j];
    }
    D -= 2 * (ga * gb.transpose() - gb * ga.transpose());
  }
  return D;
}

}  // namespace

TEST_CASE("Lie algebra basis") {
  const Eigen::Matrix3d X = matrix(kX), Y = matrix(kY), Z = matrix(kZ);
  CHECK((X * Y - Y * X - Z).norm() == 0.0);
  CHECK((Y * Z - Z * Y - X).norm() == 0.0);
  CHECK((Z * X - X * Z - Y).norm() == 0.0);
  const double t = 0.7;
  const Eigen::Vector3d e1 = exp({0, 0, t}) * Eigen::Vector3d::UnitX();
  CHECK((e1 - Eigen::Vector3d(std::cos(t), std::sin(t), 0)).norm() < 1e-15);
}

TEST_CASE("Rodrigues exponential against angle-axis") {
  std::mt19937_64 rng(51);
  std::normal_distribution<double> g(0.0, 1.5);
  for (int i = 0; i < 200; ++i) {
    const LieAlgElement A{g(rng), g(rng), g(rng)};
    const Eigen::Vector3d a = A.axis();
    const Eigen::Matrix3d ref = Eigen::AngleAxisd(a.norm(), a.normalized()).toRotationMatrix();
    CHECK((exp(A) - ref).norm() < 1e-13);
  }
  CHECK((exp({1e-9, 0, 0}) - Eigen::Matrix3d::Identity()).norm() < 1e-8);
  CHECK(exp({0, 0, 0}) == Eigen::Matrix3d::Identity());
}

TEST_CASE("projection onto the varieties") {
  const std::array<cplx, 3> s{1 / std::sqrt(2.0), I / std::sqrt(2.0), 0.0};
  const AmbientPoint on = make_point(Variety::sphere(), s);
  const auto same = project_to_variety(Variety::sphere(), on.coords);
  REQUIRE(same);
  CHECK((same->coords - on.coords).norm() < 1e-15);

  const std::array<cplx, 4> guess{1.0, I, 0.0, 0.0};
  const auto w1 = project_to_variety(Variety::brieskorn(1), make_point(Variety::brieskorn(1), guess).coords * 1.3);
  REQUIRE(w1);
  CHECK(constraint_residual(*w1) <= 1e-12);
  CHECK(std::abs(w1->coords.squaredNorm() - 2.0) <= 1e-12);

  CHECK_FALSE(project_to_variety(Variety::sphere(), Vec::Constant(6, 0.01)));
  CHECK_FALSE(project_to_variety(Variety::sphere(), Vec::Constant(6, 5.0)));
}

TEST_CASE("Gaussian guesses converge") {
  std::mt19937_64 rng(52);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Variety> vs{Variety::sphere()};
  for (int k = 0; k <= 6; ++k) vs.push_back(Variety::brieskorn(k));
  for (const auto& v : vs) {
    int ok = 0;
    for (int i = 0; i < 1000; ++i) {
      Vec guess(v.real_dim());
      for (auto& c : guess) c = g(rng);
      if (auto p = project_to_variety(v, guess)) {
        ++ok;
        CHECK(constraint_residual(*p) <= 1e-12);
      }
    }
    INFO(v.name());
    CHECK(ok >= 950);
  }
}

TEST_CASE("infinitesimal generators") {
  const std::array<cplx, 3> e1{1.0, 0.0, 0.0};
  const AmbientPoint p = make_point(Variety::sphere(), e1);
  Vec expected = Vec::Zero(6);
  expected[2] = 1;  // d/dt Re z_2
  CHECK((infinitesimal_generator(p, kZ) - expected).norm() == 0.0);
  CHECK(infinitesimal_generator(p, kX).norm() == 0.0);

  std::mt19937_64 rng(53);
  for (const auto& form : all_forms(4)) {
    for (int i = 0; i < 250; ++i) {
      const AmbientPoint q = sample_point(form.variety(), rng);
      const Eigen::MatrixXd J = constraint_jacobian(q.variety, q.coords);
      for (const auto& A : {kX, kY, kZ, LieAlgElement{0.3, -1.2, 0.5}}) {
        const Vec v = infinitesimal_generator(q, A);
        CHECK((J * v).lpNorm<Eigen::Infinity>() <= 1e-10);
        // Derivative of the group action, by central differences.
        const double h = 1e-6;
        const Vec fd = (act(exp({h * A.a, h * A.b, h * A.c}), q).coords -
                        act(exp({-h * A.a, -h * A.b, -h * A.c}), q).coords) / (2 * h);
        CHECK((fd - v).norm() <= 1e-8);
      }
    }
  }
}

TEST_CASE("forms on simple vectors") {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 100; ++i) {
    const AmbientPoint p = sample_point(Variety::sphere(), rng);
    Vec reeb(6);  // i z
    for (int j = 0; j < 3; ++j) {
      reeb[2 * j] = -p.coords[2 * j + 1];
      reeb[2 * j + 1] = p.coords[2 * j];
    }
    CHECK(std::abs(eval_form(ContactFormId::alpha_plus(), p, reeb) - 1.0) <= 1e-12);
    CHECK(eval_form(ContactFormId::alpha_plus(), p, Vec::Zero(6)) == 0.0);
    CHECK(eval_form(ContactFormId::alpha_minus(), p, Vec::Zero(6)) == 0.0);
  }
  const AmbientPoint s = sample_point(Variety::sphere(), rng);
  CHECK_THROWS_AS(eval_form(ContactFormId::alpha_k(1, 1), s, Vec::Zero(6)), std::invalid_argument);
}

TEST_CASE("moment map closed form") {
  const std::array<cplx, 3> z{1 / std::sqrt(2.0), I / std::sqrt(2.0), 0.0};
  const AmbientPoint p = make_point(Variety::sphere(), z);
  const Eigen::Vector3d mu = moment_map(p, ContactFormId::alpha_plus());
  CHECK((mu - Eigen::Vector3d(0, 0, -1)).norm() < 1e-15);
  for (const auto& A : {kX, kY, kZ})
    CHECK(std::abs(mu.dot(A.axis()) - pairing(p, ContactFormId::alpha_plus(), A)) < 1e-15);

  std::mt19937_64 rng(55);
  for (const auto& form : all_forms(4)) {
    for (int i = 0; i < 50; ++i) {
      const AmbientPoint q = sample_singular_point(form.variety(), rng);
      CHECK(moment_map(q, form).norm() <= 1e-14);
    }
  }
}

TEST_CASE("moment map equals the form on generators") {
  std::mt19937_64 rng(56);
  for (const auto& form : all_forms(4)) {
    for (int i = 0; i < 300; ++i) {
      const AmbientPoint p = sample_point(form.variety(), rng);
      const Eigen::Vector3d mu = moment_map(p, form);
      for (const auto& A : {kX, kY, kZ}) {
        const double direct = eval_form(form, p, infinitesimal_generator(p, A));
        CHECK(std::abs(direct - mu.dot(A.axis())) <= 1e-10);
        CHECK(std::abs(direct - pairing(p, form, A)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("both forms share a moment map") {
  std::mt19937_64 rng(57);
  for (int i = 0; i < 300; ++i) {
    const AmbientPoint p = sample_point(Variety::sphere(), rng);
    for (const auto& A : {kX, kY, kZ}) {
      const Vec v = infinitesimal_generator(p, A);
      CHECK(std::abs(eval_form(ContactFormId::alpha_plus(), p, v) -
                     eval_form(ContactFormId::alpha_minus(), p, v)) <= 1e-12);
    }
  }
  for (int k = 0; k <= 4; ++k)
    for (int i = 0; i < 100; ++i) {
      const AmbientPoint p = sample_point(Variety::brieskorn(k), rng);
      for (const auto& A : {kX, kY, kZ}) {
        const Vec v = infinitesimal_generator(p, A);
        CHECK(std::abs(eval_form(ContactFormId::alpha_k(k, 1), p, v) -
                       eval_form(ContactFormId::alpha_k(k, -1), p, v)) <= 1e-12);
      }
    }
}

TEST_CASE("moment map is equivariant") {
  std::mt19937_64 rng(58);
  std::normal_distribution<double> g(0.0, 2.0);
  for (const auto& form : all_forms(4)) {
    for (int i = 0; i < 100; ++i) {
      const AmbientPoint p = sample_point(form.variety(), rng);
      const Eigen::Matrix3d R = exp({g(rng), g(rng), g(rng)});
      const AmbientPoint q = act(R, p);
      CHECK(constraint_residual(q) <= 1e-12);
      CHECK((moment_map(q, form) - R * moment_map(p, form)).norm() <= 1e-9);
    }
  }
}

TEST_CASE("second singular value against SVD") {
  std::mt19937_64 rng(59);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> expo(-12.0, 0.0);
  for (int i = 0; i < 500; ++i) {
    const Eigen::Vector3d x(g(rng), g(rng), g(rng));
    Eigen::Vector3d y(g(rng), g(rng), g(rng));
    if (i % 2) y = g(rng) * x + std::pow(10.0, expo(rng)) * y;
    Eigen::Matrix<double, 2, 3> m;
    m << x.transpose(), y.transpose();
    const auto sv = Eigen::JacobiSVD<Eigen::Matrix<double, 2, 3>>(m).singularValues();
    CHECK(std::abs(second_singular_value(x, y) - sv[1]) <= 1e-13 * sv[0]);
  }
}

TEST_CASE("stabilizer classes") {
  const std::array<cplx, 3> z{1 / std::sqrt(2.0), I / std::sqrt(2.0), 0.0};
  CHECK(stabilizer_class(make_point(Variety::sphere(), z)) == StabilizerClass::Trivial);
  const std::array<cplx, 4> w{std::polar(1.0, 0.4), I * std::polar(1.0, 0.6), 0.0, 0.0};
  const AmbientPoint sing = make_point(Variety::brieskorn(3), w);
  CHECK(constraint_residual(sing) < 1e-15);
  CHECK(stabilizer_class(sing) == StabilizerClass::Circle);

  CHECK(classify_sigma(0.0) == StabilizerClass::Circle);
  CHECK(classify_sigma(0.99e-8) == StabilizerClass::Circle);
  CHECK(classify_sigma(1e-7) == StabilizerClass::Indeterminate);
  CHECK(classify_sigma(1e-6) == StabilizerClass::Trivial);

  std::mt19937_64 rng(60);
  std::uniform_real_distribution<double> lambda(0.5, 3.0);
  for (const auto& v : {Variety::sphere(), Variety::brieskorn(2)}) {
    for (int i = 0; i < 100; ++i) {
      const AmbientPoint p = i % 2 ? sample_point(v, rng) : sample_singular_point(v, rng);
      AmbientPoint scaled = p;
      scaled.coords *= lambda(rng);
      CHECK(stabilizer_class(scaled) == stabilizer_class(p));
      const auto back = project_to_variety(v, scaled.coords);
      REQUIRE(back);
      CHECK(stabilizer_class(*back) == stabilizer_class(p));
    }
  }
}

TEST_CASE("batched summaries match the pointwise functions") {
  std::mt19937_64 rng(61);
  std::vector<AmbientPoint> pts;
  for (int i = 0; i < 203; ++i)
    pts.push_back(i % 3 ? sample_point(Variety::brieskorn(2), rng) : sample_singular_point(Variety::brieskorn(2), rng));
  const auto form = ContactFormId::alpha_k(2, -1);
  const auto sums = orbit_summaries(pts, form);
  REQUIRE(sums.size() == pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK((sums[i].moment - moment_map(pts[i], form)).norm() <= 1e-14);
    CHECK(std::abs(sums[i].sigma_min - second_singular_value(pts[i].x(), pts[i].y())) <= 1e-15);
    CHECK(sums[i].stabilizer == stabilizer_class(pts[i]));
  }
}

TEST_CASE("cross-section membership") {
  const std::array<cplx, 3> z{1 / std::sqrt(2.0), I / std::sqrt(2.0), 0.0};
  const AmbientPoint p = make_point(Variety::sphere(), z);
  CHECK(in_cross_section(p, ContactFormId::alpha_plus()));
  CHECK(in_cross_section(p, ContactFormId::alpha_minus()));
  const std::array<cplx, 3> zc{1 / std::sqrt(2.0), -I / std::sqrt(2.0), 0.0};
  CHECK_FALSE(in_cross_section(make_point(Variety::sphere(), zc), ContactFormId::alpha_plus()));

  std::mt19937_64 rng(62);
  for (const auto& form : all_forms(4)) {
    for (int i = 0; i < 100; ++i) {
      CHECK_FALSE(in_cross_section(sample_singular_point(form.variety(), rng), form));
      const auto q = rotate_into_cross_section(sample_point(form.variety(), rng), form);
      REQUIRE(q);
      CHECK(in_cross_section(*q, form));
      CHECK(std::abs(q->coords[q->coords.size() - 2]) <= 1e-9);
      CHECK(std::abs(q->coords[q->coords.size() - 1]) <= 1e-9);
      // alpha on X at cross-section points is <mu, X> = 0
      CHECK(std::abs(eval_form(form, *q, infinitesimal_generator(*q, kX))) <= 1e-9);
    }
  }
}

TEST_CASE("sections lie in the cross-section") {
  for (int k = 0; k <= 6; ++k) {
    for (const cplx z0 : {cplx(0, 0), cplx(0.3, 0.2), cplx(-0.5, 0.7), cplx(0.1, -0.9)}) {
      const AmbientPoint p = brieskorn_section(k, z0);
      CHECK(constraint_residual(p) <= 1e-12);
      CHECK(in_cross_section(p, ContactFormId::alpha_k(k, 1)));
      CHECK(stabilizer_class(p) == StabilizerClass::Trivial);
    }
    const AmbientPoint edge = brieskorn_section(k, std::polar(1.0, 0.3));
    CHECK(constraint_residual(edge) <= 1e-12);
    CHECK(moment_map(edge, ContactFormId::alpha_k(k, 1)).norm() <= 1e-7);
  }
  for (const cplx w : {I, cplx(-2, 0.5), cplx(0.3, 4)}) {
    const AmbientPoint p = sphere_section(w);
    CHECK(constraint_residual(p) <= 1e-12);
    CHECK(in_cross_section(p, ContactFormId::alpha_plus()));
  }
}

TEST_CASE("d alpha by differences matches the closed form") {
  std::mt19937_64 rng(63);
  for (const auto& form : all_forms(4)) {
    for (int i = 0; i < 50; ++i) {
      const AmbientPoint p = sample_point(form.variety(), rng);
      CHECK((dalpha_matrix(form, p.coords) - exact_dalpha(form, p.coords)).lpNorm<Eigen::Infinity>() <= 1e-8);
    }
  }
}

TEST_CASE("wedge products against permutation sums") {
  std::mt19937_64 rng(64);
  std::normal_distribution<double> g(0.0, 1.0);
  for (const auto& form : all_forms(3)) {
    for (int i = 0; i < 10; ++i) {
      const AmbientPoint p = sample_point(form.variety(), rng);
      Frame f;
      for (auto& v : f) {
        v.resize(p.coords.size());
        for (auto& c : v) c = g(rng);
      }
      const Vec w = form_coefficients(form, p.coords);
      const Eigen::MatrixXd D = exact_dalpha(form, p.coords);
      const double ref = brute_volume(w, D, f);
      CHECK(std::abs(volume_form_value(form, p, f) - ref) <= 1e-7 * (1 + std::abs(ref)));
      const double ref3 = brute_three(w, D, f[0], f[1], f[2]);
      CHECK(std::abs(alpha_dalpha(form, p, f[0], f[1], f[2]) - ref3) <= 1e-7 * (1 + std::abs(ref3)));
    }
  }
}

TEST_CASE("tangent frames") {
  std::mt19937_64 rng(65);
  for (const auto& v : {Variety::sphere(), Variety::brieskorn(0), Variety::brieskorn(5)}) {
    for (int i = 0; i < 50; ++i) {
      const AmbientPoint p = sample_point(v, rng);
      const Frame f = tangent_frame(p);
      const Eigen::MatrixXd J = constraint_jacobian(v, p.coords);
      Eigen::MatrixXd basis(v.real_dim(), v.real_dim());
      basis.leftCols(v.constraint_count()) = J.transpose();
      for (int a = 0; a < 5; ++a) {
        CHECK((J * f[a]).norm() <= 1e-12);
        basis.col(v.constraint_count() + a) = f[a];
        for (int b = 0; b < 5; ++b) CHECK(std::abs(f[a].dot(f[b]) - (a == b)) <= 1e-12);
      }
      CHECK(basis.determinant() > 0);
    }
  }
}

TEST_CASE("contact condition") {
  std::mt19937_64 rng(66);
  for (const auto& form : all_forms(6)) {
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < 200; ++i) {
      const AmbientPoint p = sample_point(form.variety(), rng);
      const double v = contact_check(form, p, tangent_frame(p));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    INFO(form.name());
    CHECK((lo > 1e-6 || hi < -1e-6));
  }
  const AmbientPoint p = sample_point(Variety::sphere(), rng);
  const auto form = ContactFormId::alpha_plus();
  CHECK(std::abs(contact_check(form, p, tangent_frame(p))) > 1e-6);
  Frame repeated = tangent_frame(p);
  repeated[3] = repeated[1];
  CHECK(std::abs(volume_form_value(form, p, repeated)) <= 1e-12);
  CHECK_THROWS_AS(contact_check(form, p, repeated), DegenerateFrameError);
}

TEST_CASE("singular components by branch tracing") {
  CHECK(singular_component_type(1) == SingularComponentType::ETwist);
  CHECK(singular_component_type(2) == SingularComponentType::ETriv);
  CHECK(singular_component_type(0) == SingularComponentType::ETriv);
  for (int k = 0; k <= 12; ++k)
    CHECK((singular_component_type(k) == SingularComponentType::ETwist) == (k % 2 == 1));
  CHECK(sphere_singular_component_type() == SingularComponentType::ETwist);
  CHECK_THROWS_AS(singular_component_type(-1), std::invalid_argument);
}

TEST_CASE("loops to classes") {
  std::vector<ChartPoint> around_t, diagonal;
  for (int i = 0; i < 64; ++i) {
    const double s = 2 * kPi * i / 64;
    around_t.push_back({s, 0.4});
    diagonal.push_back({2 * s, -3 * s});
  }
  CHECK(loop_to_class(around_t) == torus::TorusClass{1, 0});
  CHECK(loop_to_class(diagonal) == torus::TorusClass{2, -3});
  std::reverse(diagonal.begin(), diagonal.end());
  CHECK(loop_to_class(diagonal) == torus::TorusClass{-2, 3});

  std::vector<ChartPoint> sparse;
  for (int i = 0; i < 8; ++i) sparse.push_back({0.0, 2 * kPi * 3 * i / 8});
  CHECK_THROWS_AS(loop_to_class(sparse), LoopError);
}

TEST_CASE("boundary loops of the Brieskorn section") {
  for (int k = 0; k <= 8; ++k) {
    const auto gamma = loop_to_class(std::span<const AmbientPoint>(brieskorn_marked_curve(k, 64 * (k + 1))));
    const auto sigma = loop_to_class(std::span<const AmbientPoint>(brieskorn_section_boundary(k, 64 * (k + 1))));
    CHECK(sigma == torus::TorusClass{1, 0});
    const std::int64_t crossings = std::abs(torus::intersection(gamma, sigma));
    // k phi = 4 pi n: k/2 crossings per turn, over two turns for odd k.
    CHECK(crossings == (k % 2 ? k : k / 2));
    for (const auto& p : brieskorn_marked_curve(k, 16)) {
      CHECK(constraint_residual(p) <= 1e-12);
      CHECK(stabilizer_class(p) == StabilizerClass::Circle);
    }
  }
  CHECK(loop_to_class(std::span<const AmbientPoint>(sphere_marked_curve(64))) == torus::TorusClass{2, 1});
  CHECK(loop_to_class(std::span<const AmbientPoint>(sphere_section_boundary(512))) == torus::TorusClass{1, 1});
}

TEST_CASE("Dehn-Euler numbers of the examples") {
  CHECK(dehn_euler_of_example(3, 1) == 3);
  CHECK(dehn_euler_of_example(4, -1) == -4);
  CHECK(dehn_euler_of_example(0, 1) == 0);
  CHECK(dehn_euler_of_example(0, -1) == 0);
  CHECK(dehn_euler_of_sphere(1) == 1);
  CHECK(dehn_euler_of_sphere(-1) == -1);
  CHECK(section_orientation(ContactFormId::alpha_k(2, 1)) == 1);
  CHECK(section_orientation(ContactFormId::alpha_k(2, -1)) == -1);
  CHECK(section_orientation(ContactFormId::alpha_plus()) == -1);
  CHECK(section_orientation(ContactFormId::alpha_minus()) == 1);
}
