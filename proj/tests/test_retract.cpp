// The section/retraction pair: S embeds a shape into its cube along
// leading-ones objects and nested generator orders, R collapses the cube
// back, S;R is the identity, and e = R;S is a split idempotent. The
// intermediate monotonicity and collapse facts are property-tested here.

#include <catch2/catch_amalgamated.hpp>

#include "graycube/retract.hpp"

using namespace graycube;

TEST_CASE("section objects are leading-ones bit strings") {
  const ThetaShape shape = parse_shape("[2;0,1]");
  CHECK(section_object(shape, 0) == "000");
  CHECK(section_object(shape, 1) == "100");
  CHECK(section_object(shape, 2) == "111");
  CHECK(section_object(parse_shape("[1;2]"), 1) == "111");
  CHECK(section_object(parse_shape("[0;]"), 0) == "");
}

TEST_CASE("section generator orders ascend then descend around the pivot") {
  const ThetaShape shape = parse_shape("[1;2]");
  CHECK(section_generator_order(shape, 1, 0).to_string() == "3<2<1");
  CHECK(section_generator_order(shape, 1, 1).to_string() == "1<3<2");
  CHECK(section_generator_order(shape, 1, 2).to_string() == "1<2<3");

  const ThetaShape longer = parse_shape("[2;0,1]");
  CHECK(section_generator_order(longer, 1, 0).to_string() == "1");
  CHECK(section_generator_order(longer, 2, 0).to_string() == "3<2");
  CHECK(section_generator_order(longer, 2, 1).to_string() == "2<3");

  CHECK_THROWS_AS(section_generator_order(shape, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(section_generator_order(shape, 2, 0), std::invalid_argument);
}

TEST_CASE("generator orders get stricter as the label grows") {
  // For i <= j the order at i is laxer than the order at j; this is what
  // makes the section's hom maps monotone. Checked for every shape that
  // fits in seven directions.
  for (const ThetaShape& shape : enumerate_shapes(7)) {
    for (int k = 1; k <= shape.n; ++k)
      for (int i = 0; i <= shape.q[k - 1]; ++i)
        for (int j = i; j <= shape.q[k - 1]; ++j) {
          INFO("shape " << shape.to_string() << " step " << k << " labels "
                        << i << "," << j);
          REQUIRE(laxer_than(section_generator_order(shape, k, i),
                             section_generator_order(shape, k, j)));
        }
  }
}

TEST_CASE("the section tabulates to a 2-functor with the right cells") {
  const ThetaShape shape = parse_shape("[1;2]");
  const TwoFunctor s = section(shape);
  CHECK(s.obj("0") == "000");
  CHECK(s.obj("1") == "111");
  CHECK(s.cell("0", "1", "0") == "3<2<1");
  CHECK(s.cell("0", "1", "1") == "1<3<2");
  CHECK(s.cell("0", "1", "2") == "1<2<3");
  CHECK(s.cell("0", "0", "id") == "id");
  CHECK(check_functor(s).ok());

  // Tuples map to concatenations of the generator orders.
  const TwoFunctor s2 = section(parse_shape("[2;0,1]"));
  CHECK(s2.cell("1", "2", "0") == "3<2");
  CHECK(s2.cell("1", "2", "1") == "2<3");
  CHECK(s2.cell("0", "2", "0,0") == "1<3<2");
  CHECK(s2.cell("0", "2", "0,1") == "1<2<3");
}

TEST_CASE("the retraction collapses objects by rank") {
  const ThetaShape shape = parse_shape("[2;0,1]");
  CHECK(retraction_object(shape, "000") == 0);
  CHECK(retraction_object(shape, "001") == 1);
  CHECK(retraction_object(shape, "010") == 1);
  CHECK(retraction_object(shape, "011") == 1);
  CHECK(retraction_object(shape, "110") == 1);
  CHECK(retraction_object(shape, "111") == 2);
}

TEST_CASE("retraction atom images follow the rank rule") {
  const ThetaShape shape = parse_shape("[2;0,1]");
  // Atoms whose target rank is not a section rank are identities.
  CHECK(retraction_atom_image(shape, {1, "010", "110"}) == "id");
  CHECK(retraction_atom_image(shape, {3, "010", "011"}) == "id");
  // Rank-1 targets land on generator 0 of the first step.
  CHECK(retraction_atom_image(shape, {1, "000", "100"}) == "0");
  CHECK(retraction_atom_image(shape, {2, "000", "010"}) == "0");
  CHECK(retraction_atom_image(shape, {3, "000", "001"}) == "0");
  // Rank-3 targets: direction beyond the previous rank picks the label,
  // everything else defaults to 0.
  CHECK(retraction_atom_image(shape, {1, "011", "111"}) == "0");
  CHECK(retraction_atom_image(shape, {2, "101", "111"}) == "0");
  CHECK(retraction_atom_image(shape, {3, "110", "111"}) == "1");

  const ThetaShape square = parse_shape("[1;1]");
  CHECK(retraction_atom_image(square, {1, "01", "11"}) == "0");
  CHECK(retraction_atom_image(square, {2, "10", "11"}) == "1");
}

TEST_CASE("the two paths around any square have comparable R-images") {
  // For each object with two chosen bits set, the lax square between its
  // two atomic paths must map to a comparable pair in the shape; this is
  // what makes R well-defined on 2-cells.
  for (const ThetaShape& shape : enumerate_shapes(6)) {
    const int d = shape.dim();
    if (d < 2) continue;
    const TwoCategory theta = build_theta(shape);
    for (const Obj& eps : cube_objects(d)) {
      for (int a = 1; a <= d; ++a) {
        if (eps[a - 1] != '1') continue;
        for (int b = a + 1; b <= d; ++b) {
          if (eps[b - 1] != '1') continue;
          Obj zeta = eps;
          zeta[a - 1] = '0';
          zeta[b - 1] = '0';
          const Obj via_a = flip_bit(zeta, a), via_b = flip_bit(zeta, b);
          const std::string rz = std::to_string(retraction_object(shape, zeta));
          const std::string re = std::to_string(retraction_object(shape, eps));
          // Lax path: b first. Strict path: a first.
          const Elt lax = compose_theta_cells(
              shape, rz, std::to_string(retraction_object(shape, via_b)), re,
              retraction_atom_image(shape, {b, zeta, via_b}),
              retraction_atom_image(shape, {a, via_b, eps}));
          const Elt strict = compose_theta_cells(
              shape, rz, std::to_string(retraction_object(shape, via_a)), re,
              retraction_atom_image(shape, {a, zeta, via_a}),
              retraction_atom_image(shape, {b, via_a, eps}));
          INFO("shape " << shape.to_string() << " square " << zeta << " -> "
                        << eps);
          REQUIRE(theta.hom(rz, re).leq(lax, strict));
        }
      }
    }
  }
}

TEST_CASE("R kills every non-final atom of a section cell") {
  // Along the decomposition of S(generator i at step k), all atoms but
  // the last map to identities and the last lands exactly on i; this is
  // why S;R is the identity on generators.
  for (const ThetaShape& shape : enumerate_shapes(6)) {
    const int d = shape.dim();
    for (int k = 1; k <= shape.n; ++k) {
      for (int i = 0; i <= shape.q[k - 1]; ++i) {
        const auto atoms = atomic_decompose(
            d, section_object(shape, k - 1), section_object(shape, k),
            section_generator_order(shape, k, i).to_string());
        REQUIRE_FALSE(atoms.empty());
        for (std::size_t t = 0; t + 1 < atoms.size(); ++t)
          REQUIRE(retraction_atom_image(shape, atoms[t]) == "id");
        REQUIRE(retraction_atom_image(shape, atoms.back()) ==
                std::to_string(i));
      }
    }
  }
}

TEST_CASE("verify_retract passes on the worked examples") {
  for (const std::string literal : {"[1;1]", "[1;2]", "[2;0,1]"}) {
    const RetractReport rep = verify_retract(parse_shape(literal));
    INFO("shape " << literal);
    CHECK(rep.section_ok);
    CHECK(rep.retraction_ok);
    CHECK(rep.composite_identity);
    CHECK(rep.idempotent_ok);
    REQUIRE(rep.ok());
    CHECK(rep.witnesses.empty());
    CHECK(rep.d == parse_shape(literal).dim());
  }
}

TEST_CASE("the degenerate and empty shapes also split") {
  CHECK(verify_retract(parse_shape("[0;]")).ok());
  CHECK(verify_retract(parse_shape("[3;0,0,0]")).ok());
  CHECK(verify_retract(parse_shape("[1;0]")).ok());
}

TEST_CASE("covering-pair and full checking build the same retraction") {
  for (const std::string literal : {"[1;2]", "[2;1,1]", "[3;0,1,0]"}) {
    const ThetaShape shape = parse_shape(literal);
    const TwoFunctor fast = retraction(shape, ExtendCheck::covering);
    const TwoFunctor slow = retraction(shape, ExtendCheck::full);
    INFO("shape " << literal);
    REQUIRE(equal_functors(fast, slow));
    REQUIRE(verify_retract(shape, ExtendCheck::full).ok());
  }
}

TEST_CASE("the idempotent e = R;S splits through the shape") {
  const IdempotentSplit split = idempotent_split(parse_shape("[1;2]"));
  CHECK(check_functor(split.e).ok());
  CHECK(split.image_object_count() == 2);
  CHECK(split.fixed_objects() == std::vector<Obj>{"000", "111"});

  // e squares to itself, absorbs into R, and fixes S.
  CHECK(equal_functors(compose_functors(split.e, split.e), split.e));
  CHECK(equal_functors(compose_functors(split.section_functor, split.e),
                       split.section_functor));
  CHECK(equal_functors(compose_functors(split.e, split.retraction_functor),
                       split.retraction_functor));
}

TEST_CASE("idempotent image counts match the shape across dimensions") {
  for (const ThetaShape& shape : enumerate_shapes(4)) {
    const IdempotentSplit split = idempotent_split(shape);
    INFO("shape " << shape.to_string());
    REQUIRE(split.image_object_count() ==
            static_cast<std::size_t>(shape.n) + 1);
  }
}

TEST_CASE("the sweep covers every shape in enumeration order") {
  const auto reports = sweep_retracts(4);
  REQUIRE(reports.size() == 16);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    INFO("shape " << reports[i].shape.to_string());
    REQUIRE(reports[i].ok());
    REQUIRE(reports[i].shape == enumerate_shapes(4)[i]);
  }
}

TEST_CASE("shapes beyond the dimension cap are rejected cleanly") {
  CHECK_THROWS_AS(verify_retract(parse_shape("[1;7]")), std::invalid_argument);
  CHECK_THROWS_AS(sweep_retracts(max_dim() + 1), std::invalid_argument);
}
