import tensorflow as tf

x = tf.constant([0.5, 0.0])
y = tf.log(x)  # expect: ML15
