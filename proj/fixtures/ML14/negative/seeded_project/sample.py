import random

picked = random.choice([1, 2, 3])
