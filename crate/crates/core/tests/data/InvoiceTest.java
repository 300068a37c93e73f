package org.example.shop;

import static org.hamcrest.CoreMatchers.*;
import static org.junit.Assert.*;

import java.util.List;
import org.junit.Test;

public class InvoiceTest {
    private Invoice invoice = new Invoice("Ann");
    private Registry registry;
    private Account account;
    private Cache cache;
    private Sampler sampler;
    private boolean didItFail;
    private int count;
    private double total;
    private double[] expectedValues;
    private List<String> names;
    private String title;
    private Object result;
    private Key key;

    @Test
    public void classicConditions() {
        assertTrue("account should be active", account.isActive());
        assertFalse(didItFail);
        assertNull("cache should be empty", cache.lookup(key));
        assertNotNull(myNum);
        assertEquals("totals differ", 0.5, invoice.getTotal(), 0.01);
        assertArrayEquals(expectedValues, sampler.readValues(), 1e-6);
        assertSame("one registry", registry, Registry.getInstance());
        assertNotSame(24, myNum);
    }

    @Test
    public void combiningMatchers() {
        assertThat(title, allOf(startsWith("In"), endsWith("e")));
        assertThat(title, allOf(startsWith("In"), endsWith("e"), containsString("vo")));
        assertThat(title, allOf(notNullValue(), startsWith("In"), endsWith("e"), containsString("vo")));
        assertThat(title, allOf(notNullValue(), startsWith("In"), endsWith("e"), containsString("vo"), not(containsString("x"))));
        assertThat(title, allOf(notNullValue(), startsWith("In"), endsWith("e"), containsString("vo"), not(containsString("x")), anything()));
        assertThat(title, allOf(startsWith("In")));
        assertThat(count, anyOf(equalTo(1), equalTo(2)));
        assertThat(count, anyOf(equalTo(1), equalTo(2), equalTo(3)));
        assertThat(count, anyOf(equalTo(1), equalTo(2), equalTo(3), equalTo(5)));
        assertThat(count, anyOf(equalTo(1), equalTo(2), equalTo(3), equalTo(5), equalTo(8)));
        assertThat(count, anyOf(equalTo(1), equalTo(2), equalTo(3), equalTo(5), equalTo(8), equalTo(13)));
        assertThat(count, anyOf(equalTo(1), equalTo(2), equalTo(3), equalTo(5), equalTo(8), equalTo(13), equalTo(21)));
        assertThat(title, both(startsWith("In")).and(endsWith("e")));
        assertThat(count, either(equalTo(0)).or(equalTo(1)));
        assertThat(names, everyItem(startsWith("My")));
    }

    @Test
    public void valueMatchers() {
        assertThat(count, is(2));
        assertThat(invoice.getTotal(), is(equalTo(total)));
        assertThat(result, is(String.class));
        assertThat(result, isA(Invoice.class));
        assertThat(result, anything());
        assertThat(result, anything("whatever"));
        assertThat(names, hasItem("Bob"));
        assertThat(names, hasItem(startsWith("B")));
        assertThat(names, hasItems("Ann", "Bob"));
        assertThat(names, hasItems(startsWith("A"), endsWith("b")));
        assertThat("customer name", invoice.getCustomerName(), equalTo("Ann"));
        assertThat(registry.lookup("x"), instanceOf(Invoice.class));
        assertThat(count, not(0));
        assertThat(result, not(nullValue()));
        assertThat(cache.lookup(key), nullValue());
        assertThat(result, nullValue(String.class));
        assertThat(invoice, notNullValue());
        assertThat(result, notNullValue(Invoice.class));
        assertThat(Registry.getInstance(), sameInstance(registry));
        assertThat("myValue", startsWith("my"));
        assertThat(title, endsWith("Total"));
        assertThat(title, containsString("voice"));
    }
}
