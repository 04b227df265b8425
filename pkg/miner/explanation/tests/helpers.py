"""Principles of the default principles file and the output they lead to, shared by the explanation tests."""
from explanation.types import IdealityPrinciple, PrincipleOrder
from traces.blocksworld import clear, on

DESIRED_AB = IdealityPrinciple.desired(on("a", "b"))
DESIRED_BC = IdealityPrinciple.desired(on("b", "c"))
DESIRED_CLEAR = IdealityPrinciple.desired(clear("a"))
MUST_PRECEDE = IdealityPrinciple.must_precede(on("b", "c"), on("a", "b"))
PRINCIPLES = [DESIRED_AB, DESIRED_BC, DESIRED_CLEAR, MUST_PRECEDE]
ORDER = PrincipleOrder({MUST_PRECEDE: 2})

# the second Although fact of the replay whose first move misplaces block a, as the explain command writes it
FACT_JSON = (
    '{"kind":"although4",'
    '"pset1":["principle(desired(on(a,b)))","holds(on(a,b),s1)"],'
    '"action":"move(a,b,p2)","state":"s2",'
    '"dev":["principle(desired(on(a,b)))","not_holds(on(a,b),s2)","never_prevented_upto(on(a,b),s2)"]}'
)
