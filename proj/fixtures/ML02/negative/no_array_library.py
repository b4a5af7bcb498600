import math

value = 1.0
print(value == math.nan)
