"""The golden sentence suite: analytically known truth values covering
1-5 variables, quantifier alternations, equалities, and both strict and
non-strict inequalities."""

GOLDEN_SENTENCES = [
    ("exists x. x^2 - 2 = 0", True),
    ("forall x. x^2 + 1 > 0", True),
    ("forall x. exists y. y > x^2", True),
    ("exists y. forall x. y > x^2", False),
    ("forall x. exists y. y^3 = x", True),
    ("exists x. x^2 + 1 = 0", False),
    ("forall x. x^2 >= 0", True),
    ("exists x. x^3 - 2 = 0 and x > 1 and x < 2", True),
    ("forall x. forall y. x^2 + y^2 >= 2*x*y", True),
    ("exists x. exists y. x^2 + y^2 = 1 and x = y", True),
    ("forall x. exists y. x + y = 0", True),
    ("exists x. forall y. x*y = y", True),
    ("forall x. forall y. exists z. z > x and z > y", True),
    ("forall b. forall c. exists x. b^2 - 4*c < 0 or x^2 + b*x + c = 0", True),
    ("exists x. forall y. y^2 > x", True),
    ("forall x. exists y. y^2 = x or x < 0", True),
    ("exists b. forall a. b > a", False),
    ("forall a. exists b. forall c. exists d. d > c and b > a", True),
    ("exists x. x > 0 and x^2 = 2 and x^3 = 3", False),
    ("forall x. x != 0 or x = 0", True),
    ("exists x. exists y. x^2 + y^2 < 0", False),
    ("forall x. exists y. y < x and y^2 > x^2 + 1", True),
    ("forall x. x >= 1 or x < 1", True),
    ("forall a. exists b. forall c. exists d. exists e. e > d and d > c and b = a", True),
    ("forall a. forall b. exists c. c^2 = a^2*b^2", True),
]

assert len(GOLDEN_SENTENCES) == 25
