# Three constants certifying the axiom instances of the identity derivation.
a : ((p|p) -> p) -> ((p -> p|p) -> (p -> p))
b : (p|p) -> p
c : p -> p|p
