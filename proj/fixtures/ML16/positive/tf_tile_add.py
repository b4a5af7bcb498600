import tensorflow as tf

a = tf.constant([[1, 2], [3, 4]])
b = tf.constant([[1, 1]])
c = tf.tile(b, [2, 1]) + a  # expect: ML16
