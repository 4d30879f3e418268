from faker import Faker

from latmed.constructions import chain
from latmed.models import Lattice

fake = Faker()


def create_random_chain(n=None) -> Lattice:
    return chain(n if n is not None else fake.random_int(1, 8))


ChainFactory = create_random_chain
