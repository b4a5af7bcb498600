import tensorflow as tf

x = tf.constant([0.5, 0.0])
y = tf.log(tf.clip_by_value(x, 1e-10, 1.0))
