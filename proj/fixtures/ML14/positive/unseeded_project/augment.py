import random

def jitter(x):
    return x + random.random()  # expect: ML14
